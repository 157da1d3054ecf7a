#pragma once
// Two-layer polynomials: forms in X_{n_0..n_{g-1}} (X_n has weight n) whose
// coefficients are polynomials over Q in named deformation parameters.

#include "semigroup.hpp"

#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gmod {

constexpr int kMaxVars = 32;

// Exponent vector indexed by position of the nongap (X_{n_0} = index 0).
struct XMono {
    std::array<std::uint8_t, kMaxVars> e{};
    int deg = 0;
    int wt = 0;

    bool divides(const XMono& o) const {
        for (int k = 0; k < kMaxVars; ++k)
            if (e[k] > o.e[k]) return false;
        return true;
    }
    bool operator==(const XMono& o) const { return e == o.e; }
    bool operator!=(const XMono& o) const { return e != o.e; }
};

inline XMono operator*(const XMono& a, const XMono& b) {
    XMono r;
    for (int k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint8_t>(a.e[k] + b.e[k]);
    r.deg = a.deg + b.deg;
    r.wt = a.wt + b.wt;
    return r;
}

// a / b, requires b | a
inline XMono operator/(const XMono& a, const XMono& b) {
    XMono r;
    for (int k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint8_t>(a.e[k] - b.e[k]);
    r.deg = a.deg - b.deg;
    r.wt = a.wt - b.wt;
    return r;
}

// The monomial order: compare (deg, weight, -i_0, -i_{g-1}, ..., -i_1)
// lexicographically. Padding past g is zero on both sides, so scanning from
// kMaxVars-1 gives the same answer without knowing g.
inline int cmp_monomials(const XMono& a, const XMono& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    if (a.wt != b.wt) return a.wt < b.wt ? -1 : 1;
    if (a.e[0] != b.e[0]) return a.e[0] > b.e[0] ? -1 : 1;
    for (int k = kMaxVars - 1; k >= 1; --k)
        if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? -1 : 1;
    return 0;
}

inline bool operator<(const XMono& a, const XMono& b) { return cmp_monomials(a, b) < 0; }

// Variables, weights and the hermitian bases Lambda_r for one semigroup.
class Ctx {
public:
    explicit Ctx(Semigroup S, int max_r = 4) : S_(std::move(S)) {
        g_ = S_.genus;
        if (g_ > kMaxVars) throw input_error("polyring", "TooManyVariables", "genus exceeds " + std::to_string(kMaxVars));
        if (is_hyperelliptic(S_)) throw input_error("polyring", "Hyperelliptic", "2 is a nongap");
        for (int k = 0; k < g_; ++k) idx_[S_.nongaps[k]] = k;
        basis_.resize(max_r + 1);
        basis_set_.resize(max_r + 1);
        for (int r = 1; r <= max_r; ++r) {
            for (const XMono& m : monomials(r)) {
                auto it = basis_[r].find(m.wt);
                if (it == basis_[r].end() || m < it->second) basis_[r][m.wt] = m;
            }
            for (auto& [w, m] : basis_[r]) basis_set_[r].insert(m);
        }
    }

    const Semigroup& semigroup() const { return S_; }
    int g() const { return g_; }
    int top() const { return 2 * g_ - 2; }
    int nongap(int k) const { return S_.nongaps[k]; }
    bool is_var(int n) const { return idx_.count(n) > 0; }
    int index(int n) const {
        auto it = idx_.find(n);
        if (it == idx_.end()) throw Error("polyring", "UnknownVariable", "X_" + std::to_string(n) + " is not a variable");
        return it->second;
    }

    XMono one() const { return XMono{}; }
    XMono var(int n) const {
        XMono m;
        m.e[index(n)] = 1;
        m.deg = 1;
        m.wt = n;
        return m;
    }
    // product of the listed variables, e.g. mono({5,5,7}) = X_5^2 X_7
    XMono mono(std::initializer_list<int> ns) const { return mono(std::vector<int>(ns)); }
    XMono mono(const std::vector<int>& ns) const {
        XMono m;
        for (int n : ns) m = m * var(n);
        return m;
    }
    // the nongaps of m as a sorted multiset
    std::vector<int> parts(const XMono& m) const {
        std::vector<int> out;
        for (int k = 0; k < g_; ++k)
            for (int j = 0; j < m.e[k]; ++j) out.push_back(S_.nongaps[k]);
        return out;
    }

    std::vector<XMono> monomials(int r) const {
        std::vector<XMono> out;
        XMono cur;
        std::function<void(int, int)> rec = [&](int k, int left) {
            if (k == g_ - 1) {
                XMono m = cur;
                m.e[k] = static_cast<std::uint8_t>(left);
                m.deg += left;
                m.wt += left * S_.nongaps[k];
                out.push_back(m);
                return;
            }
            for (int a = left; a >= 0; --a) {
                XMono save = cur;
                cur.e[k] = static_cast<std::uint8_t>(a);
                cur.deg += a;
                cur.wt += a * S_.nongaps[k];
                rec(k + 1, left - a);
                cur = save;
            }
        };
        if (g_ > 0) rec(0, r);
        return out;
    }

    const std::map<int, XMono>& basis(int r) const { return basis_.at(r); }
    bool in_basis(const XMono& m) const {
        return m.deg < static_cast<int>(basis_set_.size()) && basis_set_[m.deg].count(m) > 0;
    }
    int max_degree() const { return static_cast<int>(basis_.size()) - 1; }

    std::string show(const XMono& m) const {
        std::string s;
        for (int k = 0; k < g_; ++k) {
            if (!m.e[k]) continue;
            if (!s.empty()) s += "*";
            s += "X_" + std::to_string(S_.nongaps[k]);
            if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
        }
        return s.empty() ? "1" : s;
    }

private:
    Semigroup S_;
    int g_ = 0;
    std::map<int, int> idx_;
    std::vector<std::map<int, XMono>> basis_;
    std::vector<std::set<XMono>> basis_set_;
};

// c_{s,i,n} (quadratic) or d_{sigma,j,n} (cubic); weight w = s - n.
struct ParamName {
    char kind = 'c';
    int s = 0;
    int i = 1;
    int n = 0;
    int w = 0;
    int nu = 1;  // generators sharing weight s; 1 allows the short rendering

    // rendered with the weight as last index
    std::string render() const {
        std::string r(1, kind);
        r += "_{" + std::to_string(s) + ",";
        if (nu != 1) r += std::to_string(i) + ",";
        return r + std::to_string(w) + "}";
    }
    auto key() const { return std::make_tuple(w, kind, s, i, n); }
};

using PMono = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // sorted (param id, exponent)

inline PMono pmono_mul(const PMono& a, const PMono& b) {
    PMono r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else { r.emplace_back(a[i].first, a[i].second + b[j].second); ++i; ++j; }
    }
    return r;
}

inline int pmono_degree(const PMono& m) {
    int d = 0;
    for (auto& pe : m) d += static_cast<int>(pe.second);
    return d;
}

// Sparse polynomial over Q in parameter ids. No zero coefficients are stored.
struct ParamPoly {
    std::map<PMono, Q> t;

    ParamPoly() = default;
    static ParamPoly constant(const Q& c) {
        ParamPoly p;
        if (c != 0) p.t[{}] = c;
        return p;
    }
    static ParamPoly var(std::uint32_t id, const Q& c = 1) {
        ParamPoly p;
        if (c != 0) p.t[{{id, 1}}] = c;
        return p;
    }

    bool zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first.empty()); }
    Q constant_term() const {
        auto it = t.find({});
        return it == t.end() ? Q(0) : it->second;
    }
    int degree() const {
        int d = 0;
        for (auto& [m, c] : t) d = std::max(d, pmono_degree(m));
        return d;
    }

    void add_term(const PMono& m, const Q& c) {
        if (c == 0) return;
        auto [it, fresh] = t.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    // this += c * o
    void axpy(const Q& c, const ParamPoly& o) {
        if (c == 0) return;
        for (auto& [m, v] : o.t) add_term(m, c * v);
    }
    ParamPoly& operator+=(const ParamPoly& o) { axpy(1, o); return *this; }
    ParamPoly& operator-=(const ParamPoly& o) { axpy(-1, o); return *this; }
    ParamPoly& operator*=(const Q& c) {
        if (c == 0) t.clear();
        else for (auto& [m, v] : t) v *= c;
        return *this;
    }
    bool operator==(const ParamPoly& o) const { return t == o.t; }
    bool operator!=(const ParamPoly& o) const { return !(t == o.t); }

    // coefficient of the bare linear monomial p
    Q linear_coeff(std::uint32_t p) const {
        auto it = t.find(PMono{{p, 1}});
        return it == t.end() ? Q(0) : it->second;
    }
    bool mentions(std::uint32_t p) const {
        for (auto& [m, c] : t)
            for (auto& pe : m)
                if (pe.first == p) return true;
        return false;
    }
    ParamPoly linear_part() const {
        ParamPoly r;
        for (auto& [m, c] : t)
            if (m.size() == 1 && m[0].second == 1) r.t[m] = c;
        return r;
    }
};

inline ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
inline ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
inline ParamPoly operator*(const Q& c, ParamPoly a) { return a *= c; }

inline ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (auto& [ma, ca] : a.t)
        for (auto& [mb, cb] : b.t) r.add_term(pmono_mul(ma, mb), ca * cb);
    return r;
}

inline ParamPoly pow(const ParamPoly& a, unsigned e) {
    ParamPoly r = ParamPoly::constant(1);
    for (unsigned k = 0; k < e; ++k) r = r * a;
    return r;
}

// Replace parameters by polynomials (ids absent from `sub` stay symbolic).
inline ParamPoly substitute(const ParamPoly& p, const std::map<std::uint32_t, ParamPoly>& sub) {
    ParamPoly out;
    for (auto& [m, c] : p.t) {
        ParamPoly term = ParamPoly::constant(c);
        PMono keep;
        for (auto& [id, e] : m) {
            auto it = sub.find(id);
            if (it == sub.end()) keep.emplace_back(id, e);
            else term = term * pow(it->second, e);
        }
        if (!keep.empty()) {
            ParamPoly k;
            k.t[keep] = 1;
            term = term * k;
        }
        out += term;
    }
    return out;
}

inline Q evaluate(const ParamPoly& p, const std::function<Q(std::uint32_t)>& value) {
    Q s = 0;
    for (auto& [m, c] : p.t) {
        Q term = c;
        for (auto& [id, e] : m) {
            Q v = value(id);
            for (std::uint32_t k = 0; k < e; ++k) term *= v;
        }
        s += term;
    }
    return s;
}

// Parameter table: id -> name. Weight bookkeeping and rendering live here.
struct ParamTable {
    std::vector<ParamName> names;

    int weight(std::uint32_t id) const { return names.at(id).w; }
    int weight(const PMono& m) const {
        int w = 0;
        for (auto& [id, e] : m) w += names.at(id).w * static_cast<int>(e);
        return w;
    }
    // the common weight of all terms, or -1 if not isobaric (0 for the zero poly)
    int isobaric_weight(const ParamPoly& p) const {
        int w = -2;
        for (auto& [m, c] : p.t) {
            int x = weight(m);
            if (w == -2) w = x;
            else if (w != x) return -1;
        }
        return w == -2 ? 0 : w;
    }
    std::string render(std::uint32_t id) const { return names.at(id).render(); }

    // deterministic order for printing: by (weight, kind, label, offset) per factor
    std::vector<std::pair<PMono, Q>> sorted_terms(const ParamPoly& p) const {
        std::vector<std::pair<PMono, Q>> v(p.t.begin(), p.t.end());
        auto mkey = [&](const PMono& m) {
            std::vector<std::tuple<int, char, int, int, int, unsigned>> k;
            for (auto& [id, e] : m) {
                auto [w, kind, s, i, n] = names.at(id).key();
                k.emplace_back(w, kind, s, i, n, e);
            }
            std::sort(k.begin(), k.end());
            return k;
        };
        std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
            int da = pmono_degree(a.first), db = pmono_degree(b.first);
            if (da != db) return da < db;
            return mkey(a.first) < mkey(b.first);
        });
        return v;
    }

    std::string render(const ParamPoly& p) const {
        if (p.zero()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : sorted_terms(p)) {
            Q a = abs(c);
            if (first) s += c < 0 ? "-" : "";
            else s += c < 0 ? " - " : " + ";
            first = false;
            std::string mono;
            std::vector<std::pair<ParamName, unsigned>> fs;
            for (auto& [id, e] : m) fs.emplace_back(names.at(id), e);
            std::sort(fs.begin(), fs.end(), [](auto& x, auto& y) { return x.first.key() < y.first.key(); });
            for (auto& [nm, e] : fs) {
                if (!mono.empty()) mono += "*";
                mono += nm.render();
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) s += a.get_str();
            else if (a == 1) s += mono;
            else s += a.get_str() + "*" + mono;
        }
        return s;
    }
};

// Homogeneous form in the X variables with ParamPoly coefficients.
struct XForm {
    std::map<XMono, ParamPoly> t;

    bool zero() const { return t.empty(); }
    void add_term(const XMono& m, const ParamPoly& c) {
        if (c.zero()) return;
        auto [it, fresh] = t.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.zero()) t.erase(it);
        }
    }
    // this += coef * mult * f
    void add_scaled(const XForm& f, const XMono& mult, const ParamPoly& coef) {
        for (auto& [m, c] : f.t) add_term(m * mult, coef * c);
    }
    void add_scaled(const XForm& f, const XMono& mult, const Q& coef) {
        for (auto& [m, c] : f.t) add_term(m * mult, coef * c);
    }
    XForm& operator+=(const XForm& o) { add_scaled(o, XMono{}, Q(1)); return *this; }
    XForm& operator-=(const XForm& o) { add_scaled(o, XMono{}, Q(-1)); return *this; }
    bool operator==(const XForm& o) const { return t == o.t; }

    int degree() const { return t.empty() ? -1 : t.begin()->first.deg; }
};

inline XForm operator+(XForm a, const XForm& b) { return a += b; }
inline XForm operator-(XForm a, const XForm& b) { return a -= b; }

inline XForm operator*(const XForm& a, const XForm& b) {
    XForm r;
    for (auto& [ma, ca] : a.t)
        for (auto& [mb, cb] : b.t) r.add_term(ma * mb, ca * cb);
    return r;
}

inline XForm monomial_form(const XMono& m, const Q& c = 1) {
    XForm f;
    f.add_term(m, ParamPoly::constant(c));
    return f;
}

// Every monomial must have the same degree, and monomial weight plus
// coefficient weight must be the same for every term.
inline bool is_isobaric(const XForm& f, const ParamTable& P, int* weight = nullptr) {
    int w = -1, d = -1;
    for (auto& [m, c] : f.t) {
        if (d == -1) d = m.deg;
        else if (d != m.deg) return false;
        for (auto& [pm, v] : c.t) {
            int x = m.wt + P.weight(pm);
            if (w == -1) w = x;
            else if (w != x) return false;
        }
    }
    if (weight) *weight = w;
    return true;
}

// Sum of two homogeneous isobaric forms; refuses to mix degrees or weights.
inline XForm checked_add(const XForm& a, const XForm& b, const ParamTable& P) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    if (a.degree() != b.degree())
        throw Error("polyring", "DegreeMismatch",
                    "degree " + std::to_string(a.degree()) + " + degree " + std::to_string(b.degree()));
    int wa = -1, wb = -1;
    if (!is_isobaric(a, P, &wa) || !is_isobaric(b, P, &wb) || wa != wb)
        throw Error("polyring", "WeightMismatch", "weight " + std::to_string(wa) + " + weight " + std::to_string(wb));
    return a + b;
}

// Polynomials in a single indeterminate t.
using TPoly = std::map<int, ParamPoly>;

// X_n -> t^n
inline TPoly substitute_t(const XForm& f) {
    TPoly out;
    for (auto& [m, c] : f.t) {
        auto& slot = out[m.wt];
        slot += c;
        if (slot.zero()) out.erase(m.wt);
    }
    return out;
}

inline TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            auto& slot = r[ea + eb];
            slot += ca * cb;
            if (slot.zero()) r.erase(ea + eb);
        }
    return r;
}

inline std::string render(const XForm& f, const Ctx& C, const ParamTable& P) {
    if (f.zero()) return "0";
    std::string s;
    bool first = true;
    // largest monomial first, leading term up front
    for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) {
        const ParamPoly& c = it->second;
        std::string mono = C.show(it->first);
        if (c.is_constant()) {
            Q v = c.constant_term();
            if (first) s += v < 0 ? "-" : "";
            else s += v < 0 ? " - " : " + ";
            Q a = abs(v);
            s += (a == 1 ? "" : a.get_str() + "*") + mono;
        } else {
            s += (first ? "" : " + ") + std::string("(") + P.render(c) + ")*" + mono;
        }
        first = false;
    }
    return s;
}

}  // namespace gmod
