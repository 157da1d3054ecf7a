#pragma once
// Numeric checks at rational points of the moduli presentation: the forms
// must cut out a canonical curve smooth at P with the right Hilbert function.

#include "moduli_solver.hpp"

namespace gmod {

using Point = std::map<std::uint32_t, Q>;

// Random free values (the chart parameter fixed to 1 when a chart is given),
// then the chart solutions and the eliminations.
inline Point sample_point(const ModuliPresentation& M, Rng& rng, const ChartResult* chart = nullptr) {
    Point x;
    for (auto id : M.free) {
        if (chart && chart->solved.count(id)) continue;
        x[id] = chart && id == chart->chart ? Q(1) : rng.rational();
    }
    auto val = [&](std::uint32_t id) {
        auto it = x.find(id);
        if (it == x.end()) throw Error("verify", "MissingAssignment", "no value for parameter id " + std::to_string(id));
        return it->second;
    };
    if (chart)
        for (auto id : chart->solve_order) x[id] = evaluate(chart->solved.at(id), val);
    for (auto id : M.elimination_order) x[id] = evaluate(M.eliminations.at(id), val);
    return x;
}

// Numeric forms (constant XForm coefficients) at a point.
inline std::vector<XForm> specialize(const DeformedSet& D, const Point& x) {
    auto val = [&](std::uint32_t id) {
        auto it = x.find(id);
        if (it == x.end())
            throw input_error("verify", "MissingAssignment", D.G->params().render(id) + " has no value");
        return it->second;
    };
    for (auto id : D.active) val(id);
    std::vector<XForm> out;
    for (auto& f : D.forms) {
        XForm h;
        for (auto& [m, c] : f.t) h.add_term(m, ParamPoly::constant(evaluate(c, val)));
        out.push_back(std::move(h));
    }
    return out;
}

// On X_{2g-2} = 1 the g-3 quadrics F_{n_i+2g-2,1} and the cubic G_{4g-4,1}
// must have independent differentials at P, and their common tangent line
// must be cut out by X_{n_0}, ..., X_{n_{g-3}}: the Jacobian restricted to
// those columns has rank g-2.
inline bool check_transversal_at_P(const GeneratorSet& G, const std::vector<XForm>& forms) {
    const Ctx& C = G.ctx();
    const int g = C.g(), top = C.top();
    std::vector<std::size_t> rows;
    auto first = [&](char kind, int s) {
        auto k = G.find(kind, s, 1);
        if (!k) throw Error("verify", "MissingGenerator", "no generator of weight " + std::to_string(s));
        return *k;
    };
    for (int i = 1; i <= g - 3; ++i) rows.push_back(first('c', C.nongap(i) + top));
    rows.push_back(first('d', 4 * g - 4));
    SparseRref<int> J;
    for (auto k : rows) {
        SparseRref<int>::Row row;
        const XForm& f = forms[k];
        const int d = G.gen(k).deg;
        for (int col = 0; col <= g - 3; ++col) {
            XMono m = C.var(C.nongap(col));
            for (int e = 1; e < d; ++e) m = m * C.var(top);
            auto it = f.t.find(m);
            if (it == f.t.end()) continue;
            if (!it->second.is_constant()) throw Error("verify", "NotSpecialized", "symbolic coefficient in transversality check");
            row[col] = it->second.constant_term();
        }
        J.add(std::move(row));
    }
    return static_cast<int>(J.rank()) == g - 2;
}

inline long expected_ideal_dim(const Ctx& C, int r) {
    const long g = C.g();
    return binomial(r + g - 1, r) - ((2 * g - 2) * r + 1 - g);
}

inline bool check_hilbert(const GeneratorSet& G, const std::vector<XForm>& forms, int r) {
    return hilbert_codim(G, forms, r) == expected_ideal_dim(G.ctx(), r);
}

// every relation, lifted to the numeric forms, reduces to zero
inline bool check_lifted_syzygies(const GeneratorSet& G, const std::vector<XForm>& forms,
                                  const std::vector<SyzygyRelation>& rels) {
    for (auto& R : rels)
        if (!divide(R.expand(forms), G, forms).remainder.zero()) return false;
    return true;
}

inline bool check_residues(const ResidueSystem& R, const Point& x) {
    auto val = [&](std::uint32_t id) { return x.at(id); };
    for (auto& e : R.entries)
        if (evaluate(e.eq, val) != 0) return false;
    return true;
}

struct PointChecks {
    bool residues = false;
    bool transversal = false;
    bool lifted = false;
    std::vector<bool> hilbert;  // r = 2..max_r
    bool all() const {
        bool ok = residues && transversal && lifted;
        for (bool h : hilbert) ok = ok && h;
        return ok;
    }
    bool any_failure() const { return !all(); }
};

inline PointChecks check_point(const DeformedSet& D, const ResidueSystem& R, const std::vector<SyzygyRelation>& rels,
                               const Point& x, int max_r) {
    PointChecks c;
    c.residues = check_residues(R, x);
    auto forms = specialize(D, x);
    c.transversal = check_transversal_at_P(*D.G, forms);
    c.lifted = check_lifted_syzygies(*D.G, forms, rels);
    for (int r = 2; r <= max_r; ++r) c.hilbert.push_back(check_hilbert(*D.G, forms, r));
    return c;
}

struct VerificationSummary {
    int samples = 0;
    int passed = 0;
    int perturbed = 0;
    int perturbed_detected = 0;
    int max_degree = 4;
    bool used_chart = false;
    std::string skipped;  // why no points were sampled, if so
    bool ok() const { return passed == samples && perturbed_detected == perturbed; }
};

// Solved points must pass every check; the same points with one eliminated
// coordinate moved by +1 must fail at least one.
inline VerificationSummary run_verification(const DeformedSet& D, const ResidueSystem& R,
                                            const std::vector<SyzygyRelation>& rels, const ModuliPresentation& M,
                                            const ChartResult* chart, int samples, int max_r, Rng& rng) {
    VerificationSummary v;
    v.max_degree = max_r;
    v.used_chart = chart != nullptr;
    for (int k = 0; k < samples; ++k) {
        Point x = sample_point(M, rng, chart);
        ++v.samples;
        if (check_point(D, R, rels, x, max_r).all()) ++v.passed;
        if (M.elimination_order.empty()) continue;
        const auto victim = M.elimination_order[rng.uniform(0, static_cast<std::int64_t>(M.elimination_order.size()) - 1)];
        x[victim] += 1;
        ++v.perturbed;
        if (check_point(D, R, rels, x, max_r).any_failure()) ++v.perturbed_detected;
    }
    return v;
}

}  // namespace gmod
