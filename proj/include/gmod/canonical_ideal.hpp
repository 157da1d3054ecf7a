#pragma once
// Initial binomial generators of the monomial curve's canonical ideal and the
// division onto the Lambda_r bases.

#include "linalg.hpp"
#include "polyring.hpp"

#include <optional>

namespace gmod {

struct Generator {
    char kind = 'c';  // 'c' quadratic F, 'd' cubic G
    int deg = 2;
    int s = 0;        // weight (s or sigma)
    int i = 1;        // label index, 1-based among the emitted generators of weight s
    int nu = 1;       // number of generators of weight s
    XMono lead, base;
    std::vector<std::uint32_t> params;  // ids, ascending offset

    std::string name() const {
        std::string r = kind == 'c' ? "F_{" : "G_{";
        r += std::to_string(s);
        if (nu != 1) r += "," + std::to_string(i);
        return r + "}";
    }
};

class GeneratorSet {
public:
    explicit GeneratorSet(const Semigroup& S) : ctx_(checked(S)) {
        build(2, 'c');
        build(3, 'd');
        const long nq = dim_Ir(S, 2);
        const long wp = cubic_counts(S).wp;
        if (static_cast<long>(quadratic_count()) != nq || static_cast<long>(cubic_count()) != wp)
            throw Error("canonical_ideal", "GeneratorCount", "generator counts disagree with the dimension formulas");
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            const Generator& G = gens_[k];
            if (!(G.base < G.lead)) throw Error("canonical_ideal", "LeadOrder", G.name() + " lead is not the greater monomial");
            XForm f;
            f.add_term(G.lead, ParamPoly::constant(1));
            f.add_term(G.base, ParamPoly::constant(-1));
            initial_.push_back(std::move(f));
        }
    }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Generator>& gens() const { return gens_; }
    const Generator& gen(std::size_t k) const { return gens_.at(k); }
    std::size_t size() const { return gens_.size(); }
    std::size_t quadratic_count() const { return nquad_; }
    std::size_t cubic_count() const { return gens_.size() - nquad_; }
    const std::vector<XForm>& initial() const { return initial_; }
    const ParamTable& params() const { return params_; }
    int param_gen(std::uint32_t id) const { return param_gen_.at(id); }
    const XMono& param_monomial(std::uint32_t id) const { return param_Z_.at(id); }

    // generator by label; i = 0 means "the only one of that weight"
    std::optional<std::size_t> find(char kind, int s, int i = 0) const {
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            const Generator& G = gens_[k];
            if (G.kind != kind || G.s != s) continue;
            if (i == 0 ? G.nu == 1 : G.i == i) return k;
        }
        return std::nullopt;
    }
    std::size_t at(char kind, int s, int i = 0) const {
        auto k = find(kind, s, i);
        if (!k) throw input_error("canonical_ideal", "UnknownGenerator",
                                  std::string(1, kind == 'c' ? 'F' : 'G') + "_" + std::to_string(s) + (i ? "," + std::to_string(i) : ""));
        return *k;
    }
    // parameter by (kind, s, i, weight); i = 0 for the short form
    std::optional<std::uint32_t> find_param(char kind, int s, int i, int w) const {
        auto k = find(kind, s, i);
        if (!k && i == 1) k = find(kind, s, 0);  // c_{s,1,w} is accepted for a lone generator
        if (!k) return std::nullopt;
        for (auto id : gens_[*k].params)
            if (params_.names[id].w == w) return id;
        return std::nullopt;
    }
    std::uint32_t param(char kind, int s, int i, int w) const {
        auto p = find_param(kind, s, i, w);
        if (!p) throw input_error("deformation", "UnknownParameter",
                                  std::string(1, kind) + "_{" + std::to_string(s) + "," + std::to_string(i) + "," + std::to_string(w) + "}");
        return *p;
    }

    std::string render_initial(std::size_t k) const {
        const Generator& G = gens_[k];
        return G.name() + "^(0) = " + ctx_.show(G.lead) + " - " + ctx_.show(G.base);
    }

private:
    static Ctx checked(const Semigroup& S) {
        require_odd(S, "canonical_ideal");
        return Ctx(S);
    }

    // a cubic binomial m - base is a multiple of a quadric when some X_k
    // divides both terms and m/X_k falls outside Lambda_2
    bool is_multiple(const XMono& m, const XMono& base) const {
        for (int k = 0; k < ctx_.g(); ++k) {
            if (!m.e[k] || !base.e[k]) continue;
            XMono xk;
            xk.e[k] = 1;
            xk.deg = 1;
            xk.wt = ctx_.nongap(k);
            if (!ctx_.in_basis(m / xk)) return true;
        }
        return false;
    }

    void build(int r, char kind) {
        const Semigroup& S = ctx_.semigroup();
        for (auto& [w, base] : ctx_.basis(r)) {
            std::vector<XMono> others;
            if (r == 2) {
                for (auto& p : partitions2(S, w)) {
                    if (p.b > ctx_.top()) continue;
                    XMono m = ctx_.mono({p.a, p.b});
                    if (m != base) others.push_back(m);
                }
            } else {
                for (auto& p : partitions3(S, w)) {
                    if (p.c > ctx_.top()) continue;
                    XMono m = ctx_.mono({p.a, p.b, p.c});
                    if (m != base && !is_multiple(m, base)) others.push_back(m);
                }
            }
            for (std::size_t j = 0; j < others.size(); ++j) {
                Generator G;
                G.kind = kind;
                G.deg = r;
                G.s = w;
                G.i = static_cast<int>(j) + 1;
                G.nu = static_cast<int>(others.size());
                G.lead = others[j];
                G.base = base;
                const auto gi = static_cast<int>(gens_.size());
                for (auto& [n, Z] : ctx_.basis(r)) {
                    if (n >= w) break;
                    auto id = static_cast<std::uint32_t>(params_.names.size());
                    params_.names.push_back({kind, w, G.i, n, w - n, G.nu});
                    param_gen_.push_back(gi);
                    param_Z_.push_back(Z);
                    G.params.push_back(id);
                }
                gens_.push_back(std::move(G));
            }
        }
        if (r == 2) nquad_ = gens_.size();
    }

    Ctx ctx_;
    std::vector<Generator> gens_;
    std::size_t nquad_ = 0;
    std::vector<XForm> initial_;
    ParamTable params_;
    std::vector<int> param_gen_;
    std::vector<XMono> param_Z_;
};

struct ReductionCertificate {
    std::map<std::size_t, XForm> quotients;  // generator index -> multiplier
    XForm remainder;
};

struct DivideOptions {
    int weight_bound = -1;  // if >= 0, every rewritten monomial must have weight < bound
    Rng* random_order = nullptr;  // rewrite a random reducible monomial (confluence tests)
    bool verify = false;          // check f = sum q*g + rem before returning
};

// Rewrite the greatest monomial outside Lambda_r with the first generator
// whose leading monomial divides it, until only basis monomials remain.
// `forms` runs parallel to G.gens(); it may be the initial or a deformed set.
inline ReductionCertificate divide(const XForm& f, const GeneratorSet& G, const std::vector<XForm>& forms,
                                   const DivideOptions& opt = {}) {
    const Ctx& C = G.ctx();
    ReductionCertificate cert;
    XForm rem = f;
    for (;;) {
        const XMono* pick = nullptr;
        if (opt.random_order) {
            std::vector<const XMono*> cand;
            for (auto& [m, c] : rem.t)
                if (!C.in_basis(m)) cand.push_back(&m);
            if (!cand.empty()) pick = cand[opt.random_order->uniform(0, static_cast<std::int64_t>(cand.size()) - 1)];
        } else {
            for (auto it = rem.t.rbegin(); it != rem.t.rend(); ++it)
                if (!C.in_basis(it->first)) { pick = &it->first; break; }
        }
        if (!pick) break;
        const XMono m = *pick;
        if (m.deg > C.max_degree())
            throw Error("canonical_ideal", "DegreeTooHigh", "no Lambda basis in degree " + std::to_string(m.deg));
        if (opt.weight_bound >= 0 && m.wt >= opt.weight_bound)
            throw Error("deformation", "WeightViolation",
                        "reduction of " + C.show(m) + " breaks the strict weight bound " + std::to_string(opt.weight_bound));
        std::size_t k = 0;
        for (; k < G.size(); ++k)
            if (G.gen(k).lead.divides(m) && G.gen(k).deg <= m.deg) break;
        if (k == G.size())
            throw Error("canonical_ideal", "IrreducibleNonBasis", C.show(m) + " is outside Lambda and has no divisible lead");
        const XMono mult = m / G.gen(k).lead;
        const ParamPoly coef = rem.t.at(m);
        rem.add_scaled(forms[k], mult, Q(-1) * coef);
        cert.quotients[k].add_term(mult, coef);
    }
    cert.remainder = std::move(rem);
    if (opt.verify) {
        XForm back = cert.remainder;
        for (auto& [k, q] : cert.quotients) back += q * forms[k];
        if (!(back == f)) throw Error("canonical_ideal", "CertificateMismatch", "f != sum q*g + remainder");
    }
    return cert;
}

inline bool ideal_membership(const XForm& f, const GeneratorSet& G) {
    return divide(f, G, G.initial()).remainder.zero();
}

// Numeric (rational) forms, e.g. after specializing the parameters.
using NumForm = std::map<XMono, Q>;

inline NumForm to_numeric(const XForm& f) {
    NumForm out;
    for (auto& [m, c] : f.t) {
        if (!c.is_constant()) throw Error("verify", "NotSpecialized", "form still has symbolic coefficients");
        out[m] = c.constant_term();
    }
    return out;
}

// rank of span{monomial * form} in degree r by plain elimination
inline long span_rank(const Ctx& C, const std::vector<NumForm>& forms, int r) {
    SparseRref<XMono> M({}, false);
    std::map<int, std::vector<XMono>> mons;
    for (const NumForm& f : forms) {
        if (f.empty()) continue;
        const int d = f.begin()->first.deg;
        if (d > r) continue;
        if (!mons.count(r - d)) mons[r - d] = C.monomials(r - d);
        for (const XMono& mu : mons[r - d]) {
            SparseRref<XMono>::Row row;
            for (auto& [m, c] : f) row[m * mu] = c;
            M.add(std::move(row));
        }
    }
    return static_cast<long>(M.rank());
}

// Same rank for forms parallel to G.gens(). When every form still has its
// generator's lead as greatest monomial with coefficient 1, each monomial
// outside Lambda_r leads some row, so the rank is that count plus the rank
// of the division remainders (which live on Lambda_r). Otherwise fall back
// to plain elimination.
inline long hilbert_codim(const GeneratorSet& G, const std::vector<XForm>& forms, int r) {
    const Ctx& C = G.ctx();
    bool structured = r <= C.max_degree();
    for (std::size_t k = 0; structured && k < forms.size(); ++k) {
        const auto& f = forms[k];
        structured = !f.zero() && f.t.rbegin()->first == G.gen(k).lead && f.t.rbegin()->second.is_constant() &&
                     f.t.rbegin()->second.constant_term() == 1;
    }
    if (!structured) {
        std::vector<NumForm> nf;
        for (auto& f : forms) nf.push_back(to_numeric(f));
        return span_rank(C, nf, r);
    }
    const long outside = static_cast<long>(binomial(r + C.g() - 1, r)) - static_cast<long>(C.basis(r).size());
    SparseRref<XMono> rems({}, false);
    std::map<int, std::vector<XMono>> mons;
    for (std::size_t k = 0; k < forms.size(); ++k) {
        const int d = G.gen(k).deg;
        if (d > r) continue;
        if (!mons.count(r - d)) mons[r - d] = C.monomials(r - d);
        for (const XMono& mu : mons[r - d]) {
            XForm row;
            row.add_scaled(forms[k], mu, Q(1));
            auto rem = divide(row, G, forms).remainder;
            SparseRref<XMono>::Row v;
            for (auto& [m, c] : rem.t) v[m] = c.constant_term();
            rems.add(std::move(v));
        }
    }
    return outside + static_cast<long>(rems.rank());
}

}  // namespace gmod
