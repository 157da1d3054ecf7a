#pragma once
// Linear (and degree-2 multiplier) syzygies among the initial generators:
// one relation X_{2g-2}*T + sum(+-mu*H) = 0 per target generator T.

#include "canonical_ideal.hpp"

#include <deque>

namespace gmod {

struct SyzTerm {
    int sign = 1;
    XMono mult;
    std::size_t gen = 0;
};

struct SyzygyRelation {
    std::size_t target = 0;
    std::vector<SyzTerm> terms;  // includes the target term +X_{2g-2}*T
    int weight = 0;              // 2g-2 + weight of the target
    int degree = 0;              // degree of every summand
    std::string source;          // "pinned", "template-A", "bfs", ...

    XForm expand(const std::vector<XForm>& forms) const {
        XForm f;
        for (auto& t : terms) f.add_scaled(forms[t.gen], t.mult, Q(t.sign));
        return f;
    }
};

inline std::string render(const SyzygyRelation& R, const GeneratorSet& G) {
    std::string s;
    for (std::size_t k = 0; k < R.terms.size(); ++k) {
        const auto& t = R.terms[k];
        if (k) s += t.sign > 0 ? " + " : " - ";
        else if (t.sign < 0) s += "-";
        if (t.mult.deg) s += G.ctx().show(t.mult) + "*";
        s += G.gen(t.gen).name();
    }
    return s + " = 0";
}

// Targets without a relation: F_{n_i+2g-2,1} for i = 1..g-3 and G_{4g-4,1}.
inline bool excluded_target(const GeneratorSet& G, std::size_t k) {
    const Generator& H = G.gen(k);
    const Ctx& C = G.ctx();
    if (H.deg == 2 && H.i == 1) {
        for (int j = 1; j <= C.g() - 3; ++j)
            if (H.s - C.top() == C.nongap(j)) return true;
    }
    return H.deg == 3 && H.s == 4 * C.g() - 4 && H.i == 1;
}

// Checks shared by every construction.
inline void validate(const SyzygyRelation& R, const GeneratorSet& G) {
    const Ctx& C = G.ctx();
    const XMono xt = C.var(C.top());
    bool has_target = false;
    for (auto& t : R.terms) {
        if (t.sign != 1 && t.sign != -1) throw Error("syzygy", "BadCoefficient", render(R, G));
        if (t.mult.deg > 2) throw Error("syzygy", "MultiplierDegree", "multiplier degree above 2 in " + render(R, G));
        if (t.mult.wt + G.gen(t.gen).s != R.weight) throw Error("syzygy", "WeightMismatch", render(R, G));
        if (t.gen == R.target && t.mult == xt && t.sign == 1) has_target = true;
    }
    if (!has_target) throw Error("syzygy", "MissingTarget", render(R, G));
    if (!R.expand(G.initial()).zero()) throw Error("syzygy", "NotASyzygy", render(R, G));
}

// Pinned relations for genus 5 and 6, in the labels used here. Each entry
// is (sign, multiplier variables, kind, s, i) with i = 0 for a lone label.
struct PinnedTerm {
    int sign;
    std::vector<int> mult;
    char kind;
    int s;
    int i;
};

inline const std::vector<std::vector<PinnedTerm>>& pinned_syzygies(int g) {
    static const std::vector<std::vector<PinnedTerm>> g5 = {
        {{1, {8}, 'c', 12, 0}, {-1, {7}, 'c', 13, 0}, {1, {6}, 'c', 14, 0}},
        {{1, {8}, 'd', 15, 0}, {-1, {5, 6}, 'c', 12, 0}, {1, {5}, 'd', 18, 0}, {-1, {7}, 'd', 16, 0}},
        {{1, {8}, 'd', 18, 0}, {-1, {5}, 'd', 21, 0}, {1, {5, 7}, 'c', 14, 0}, {-1, {6, 8}, 'c', 12, 0}},
        {{1, {8}, 'd', 21, 0}, {-1, {7, 8}, 'c', 14, 0}, {-1, {8, 8}, 'c', 13, 0}},
    };
    static const std::vector<std::vector<PinnedTerm>> g6 = {
        {{1, {10}, 'c', 14, 0}, {-1, {8}, 'c', 16, 1}, {1, {7}, 'c', 17, 0}},
        {{1, {10}, 'c', 15, 0}, {-1, {9}, 'c', 16, 1}, {1, {7}, 'c', 18, 0}},
        {{1, {10}, 'c', 16, 2}, {-1, {10}, 'c', 16, 1}, {-1, {9}, 'c', 17, 0}, {1, {8}, 'c', 18, 0}},
        {{1, {10}, 'd', 18, 0}, {-1, {8}, 'd', 20, 2}, {1, {6, 6}, 'c', 16, 2}},
        {{1, {10}, 'd', 19, 0}, {-1, {9}, 'd', 20, 1}, {1, {6, 7}, 'c', 16, 1}},
        {{1, {10}, 'd', 20, 2}, {-1, {10}, 'd', 20, 1}, {1, {6, 10}, 'c', 14, 0}},
        {{1, {10}, 'd', 21, 0}, {-1, {7, 10}, 'c', 14, 0}, {-1, {6, 10}, 'c', 15, 0}},
        {{1, {10}, 'd', 22, 0}, {-1, {6, 10}, 'c', 16, 2}, {-1, {8, 10}, 'c', 14, 0}},
        {{1, {10}, 'd', 26, 0}, {-1, {10, 10}, 'c', 16, 1}, {-1, {9, 10}, 'c', 17, 0}},
        {{1, {10}, 'd', 27, 0}, {-1, {10, 10}, 'c', 17, 0}, {-1, {9, 10}, 'c', 18, 0}},
    };
    static const std::vector<std::vector<PinnedTerm>> none;
    return g == 5 ? g5 : g == 6 ? g6 : none;
}

class SyzygyBuilder {
public:
    explicit SyzygyBuilder(const GeneratorSet& G) : G_(G), C_(G.ctx()) {
        for (std::size_t k = 0; k < G.size(); ++k) lead_[G.gen(k).lead] = k;
    }

    std::vector<SyzygyRelation> pinned() const {
        std::vector<SyzygyRelation> out;
        for (auto& rows : pinned_syzygies(C_.g())) {
            SyzygyRelation R;
            for (auto& p : rows) R.terms.push_back({p.sign, C_.mono(p.mult), G_.at(p.kind, p.s, p.i)});
            R.target = R.terms.front().gen;
            finish(R, "pinned");
            out.push_back(std::move(R));
        }
        return out;
    }

    // Closed-form templates with a breadth-first fallback.
    std::vector<SyzygyRelation> generic() const {
        std::vector<SyzygyRelation> out;
        for (std::size_t k = 0; k < G_.size(); ++k) {
            if (excluded_target(G_, k)) continue;
            out.push_back(G_.gen(k).deg == 2 ? quadratic(k) : cubic(k));
        }
        return out;
    }

    // pinned tables for genus 5 and 6, templates elsewhere
    std::vector<SyzygyRelation> build() const {
        auto p = pinned();
        return p.empty() ? generic() : p;
    }

    SyzygyRelation quadratic(std::size_t ti) const {
        const Generator& T = G_.gen(ti);
        const int top = C_.top();
        XMono other = T.base;
        if (T.base.e[C_.index(top)]) {
            auto f1 = G_.find('c', T.s, 1);
            if (!f1 || *f1 == ti) throw Error("syzygy", "CaseExhaustion", T.name() + " has no partner generator");
            other = G_.gen(*f1).lead;
        }
        auto qr = C_.parts(other), mn = C_.parts(T.lead);
        const int q = qr[0], r = qr[1], m = mn[0], n = mn[1];
        if (!(q < m && m <= n && n < r && r < top))
            throw Error("syzygy", "CaseExhaustion", T.name() + " does not have the expected shape");
        const XMono xt = C_.var(top);
        std::vector<Part> parts{{1, xt, T.lead, other}};
        const int k = top - r + n;
        if (C_.is_var(k)) {
            parts.push_back({1, X({r}), X({q, top}), X({m, k})});
            parts.push_back({-1, X({m}), X({n, top}), X({r, k})});
        } else {
            if (!C_.is_var(r + 1) || !C_.is_var(m + 1))
                throw Error("syzygy", "CaseExhaustion", T.name() + " fits no case");
            parts.push_back({1, X({q}), X({top, r}), X({top - 1, r + 1})});
            parts.push_back({-1, X({top - 1}), X({m + 1, n}), X({q, r + 1})});
            parts.push_back({-1, X({n}), X({m, top}), X({top - 1, m + 1})});
        }
        SyzygyRelation R;
        R.target = ti;
        R.terms = assemble(parts);
        finish(R, "template");
        return R;
    }

    SyzygyRelation cubic(std::size_t ti) const {
        const Generator& T = G_.gen(ti);
        const int top = C_.top();
        const XMono xt = C_.var(top);
        auto A = C_.parts(T.lead), B = C_.parts(T.base);
        for (int sg : {1, -1}) {
            // sg*T = X_m X_n X_p - X_q X_r X_t with q the smallest index
            const auto& P1 = sg > 0 ? A : B;
            const auto& P2 = sg > 0 ? B : A;
            const int m = P1[0], n = P1[1], p = P1[2], q = P2[0], r = P2[1], t = P2[2];
            if (q > std::min({m, n, p, r, t})) continue;
            const Part lhs{sg, xt, T.lead, T.base};
            std::vector<std::pair<std::string, std::vector<Part>>> cands;
            int k = top - p + q;
            if (C_.is_var(k) && k < top)
                cands.push_back({"template-A", {lhs, {1, X({r}), X({top, t, q}), X({t, p, k})}, {-1, X({p}), X({top, m, n}), X({r, t, k})}}});
            k = top - r + p;
            if (C_.is_var(k))
                cands.push_back({"template-B", {lhs, {1, X({m}), X({k, r, n}), X({top, p, n})}, {-1, X({r}), X({k, m, n}), X({top, t, q})}}});
            if (C_.is_var(p + 1) && C_.is_var(r + 1))
                cands.push_back({"template-C", {lhs,
                                             {1, X({top - 1}), X({r + 1, q, t}), X({p + 1, n, m})},
                                             {-1, X({m}), X({p, top, n}), X({p + 1, top - 1, n})},
                                             {-1, X({q}), X({top - 1, r + 1, t}), X({top, r, t})}}});
            for (auto& [name, parts] : cands) {
                SyzygyRelation R;
                R.target = ti;
                try {
                    R.terms = assemble(parts);
                } catch (const Error&) {
                    continue;
                }
                if (sg < 0)
                    for (auto& tm : R.terms) tm.sign = -tm.sign;
                bool keeps_target = false;
                for (auto& tm : R.terms)
                    if (tm.gen == ti && tm.mult == xt && tm.sign == 1) keeps_target = true;
                if (!keeps_target || !R.expand(G_.initial()).zero()) continue;
                finish(R, name);
                return R;
            }
        }
        return bfs(ti);
    }

    // Shortest chain of binomial moves from X_top*lead to X_top*base inside
    // the monomial fibre; the moves form a +-1 relation.
    SyzygyRelation bfs(std::size_t ti) const {
        const Generator& T = G_.gen(ti);
        const XMono xt = C_.var(C_.top());
        const XMono start = xt * T.lead, goal = xt * T.base;
        struct Step { XMono from; int sign; XMono mult; std::size_t gen; };
        std::map<XMono, std::optional<Step>> prev{{start, std::nullopt}};
        std::deque<XMono> dq{start};
        while (!dq.empty() && !prev.count(goal)) {
            XMono u = dq.front();
            dq.pop_front();
            for (std::size_t k = 0; k < G_.size(); ++k) {
                const Generator& H = G_.gen(k);
                if (H.deg > T.deg || (T.deg == 2 && H.deg != 2)) continue;
                for (int dir : {1, -1}) {
                    const XMono& src = dir > 0 ? H.lead : H.base;
                    const XMono& dst = dir > 0 ? H.base : H.lead;
                    if (!src.divides(u)) continue;
                    XMono mu = u / src;
                    if (k == ti && mu == xt) continue;
                    XMono v = mu * dst;
                    if (prev.count(v)) continue;
                    prev[v] = Step{u, dir, mu, k};
                    dq.push_back(v);
                }
            }
        }
        if (!prev.count(goal)) throw Error("syzygy", "CaseExhaustion", "no relation found for " + T.name());
        SyzygyRelation R;
        R.target = ti;
        R.terms.push_back({1, xt, ti});
        std::vector<SyzTerm> path;
        for (XMono v = goal; prev.at(v); v = prev.at(v)->from) {
            const Step& s = *prev.at(v);
            path.push_back({-s.sign, s.mult, s.gen});
        }
        R.terms.insert(R.terms.end(), path.rbegin(), path.rend());
        finish(R, "bfs");
        return R;
    }

private:
    struct Part {
        int sign;
        XMono mult;
        XMono u, v;  // sign * mult * (X^u - X^v)
    };
    using Piece = std::vector<SyzTerm>;

    XMono X(std::initializer_list<int> ns) const {
        for (int n : ns)
            if (!C_.is_var(n)) throw Error("syzygy", "NotAVariable", "X_" + std::to_string(n));
        return C_.mono(ns);
    }

    // u - basis(u) in terms of generators
    Piece to_base(const XMono& u) const {
        const XMono& b = C_.basis(u.deg).at(u.wt);
        if (u == b) return {};
        auto it = lead_.find(u);
        if (it != lead_.end() && G_.gen(it->second).deg == u.deg) return {{1, XMono{}, it->second}};
        if (u.deg == 3) {
            for (int k = 0; k < C_.g(); ++k) {
                if (!u.e[k] || !b.e[k]) continue;
                XMono xk = C_.var(C_.nongap(k));
                if (C_.in_basis(u / xk)) continue;
                Piece out;
                for (auto& t : bracket(u / xk, b / xk)) out.push_back({t.sign, t.mult * xk, t.gen});
                return out;
            }
        }
        throw Error("syzygy", "Unresolvable", "cannot express " + C_.show(u) + " - " + C_.show(b));
    }

    Piece bracket(const XMono& u, const XMono& v) const {
        Piece out = to_base(u);
        for (auto t : to_base(v)) {
            t.sign = -t.sign;
            out.push_back(t);
        }
        return out;
    }

    std::vector<SyzTerm> assemble(const std::vector<Part>& parts) const {
        std::vector<std::pair<std::pair<XMono, std::size_t>, int>> acc;
        for (auto& p : parts)
            for (auto& t : bracket(p.u, p.v)) {
                auto key = std::make_pair(t.mult * p.mult, t.gen);
                auto it = std::find_if(acc.begin(), acc.end(), [&](auto& a) { return a.first == key; });
                if (it == acc.end()) acc.push_back({key, p.sign * t.sign});
                else it->second += p.sign * t.sign;
            }
        std::vector<SyzTerm> out;
        for (auto& [key, c] : acc) {
            if (c == 0) continue;
            if (c != 1 && c != -1) throw Error("syzygy", "BadCoefficient", "template produced coefficient " + std::to_string(c));
            out.push_back({c, key.first, key.second});
        }
        return out;
    }

    void finish(SyzygyRelation& R, const std::string& source) const {
        const Generator& T = G_.gen(R.target);
        R.weight = C_.top() + T.s;
        R.degree = T.deg + 1;
        R.source = source;
        validate(R, G_);
    }

    const GeneratorSet& G_;
    const Ctx& C_;
    std::map<XMono, std::size_t> lead_;
};

struct SyzygySet {
    std::vector<SyzygyRelation> quadratic, cubic;
    std::vector<SyzygyRelation> all() const {
        auto v = quadratic;
        v.insert(v.end(), cubic.begin(), cubic.end());
        return v;
    }
};

inline SyzygySet build_syzygies(const GeneratorSet& G, bool pinned_if_available = true) {
    SyzygyBuilder B(G);
    auto rel = pinned_if_available ? B.build() : B.generic();
    std::sort(rel.begin(), rel.end(), [](auto& a, auto& b) { return a.target < b.target; });
    SyzygySet out;
    for (auto& R : rel) (G.gen(R.target).deg == 2 ? out.quadratic : out.cubic).push_back(std::move(R));
    const long g = G.ctx().g();
    if (static_cast<long>(out.quadratic.size()) != (g - 3) * (g - 4) / 2 ||
        out.cubic.size() + 1 != G.cubic_count())
        throw Error("syzygy", "CountLaw", "syzygy counts disagree with (g-3)(g-4)/2 and wp-1");
    return out;
}

}  // namespace gmod
