#pragma once
// Triangular solve of the obstruction equations by increasing weight, the
// residual equations, the G_m action and affine chart dimensions.

#include "tangent.hpp"

namespace gmod {

struct Residual {
    int weight;
    ParamPoly eq;
};

struct ModuliPresentation {
    std::vector<std::uint32_t> free;
    std::vector<int> alpha;
    std::map<std::uint32_t, ParamPoly> eliminations;  // in free names only
    std::vector<std::uint32_t> elimination_order;     // as solved
    std::vector<Residual> residual;                   // minimal generators found
    std::size_t residual_candidates = 0;  // rows left without a pivot
    std::size_t redundant = 0;            // rows reduced to 0 by earlier eliminations
    std::size_t absorbed = 0;             // candidates already in the residual ideal
    std::array<std::size_t, 4> classes{}; // eliminations of degree 0, 1, 2, >= 3
};

inline PMono pm1(std::uint32_t id) { return PMono{{id, 1}}; }

inline ModuliPresentation solve_by_weight(const ResidueSystem& R, const GradedDims& T, const DeformedSet& D) {
    const ParamTable& P = D.G->params();
    std::set<std::uint32_t> freeset(T.free.begin(), T.free.end());
    std::vector<int> pos(P.names.size(), 1 << 30);
    for (std::size_t k = 0; k < T.order.size(); ++k) pos[T.order[k]] = static_cast<int>(k);

    std::map<int, std::vector<const ParamPoly*>> byw;
    for (auto& e : R.entries) byw[e.weight].push_back(&e.eq);

    ModuliPresentation M;
    M.free = T.free;
    M.alpha = T.alpha;
    std::vector<Residual> candidates;
    for (auto& [w, eqs] : byw) {
        std::vector<std::pair<std::uint32_t, ParamPoly>> pivots;
        for (const ParamPoly* src : eqs) {
            ParamPoly r = substitute(*src, M.eliminations);
            for (auto& [pid, pr] : pivots) {
                Q c = r.linear_coeff(pid);
                if (c != 0) r.axpy(-c, pr);
            }
            if (r.zero()) { ++M.redundant; continue; }
            std::optional<std::uint32_t> best;
            for (auto& [m, c] : r.t) {
                if (m.size() != 1 || m[0].second != 1) continue;
                const auto id = m[0].first;
                if (freeset.count(id) || P.weight(id) != w) continue;
                if (!best || pos[id] < pos[*best]) best = id;
            }
            if (!best) { candidates.push_back({w, std::move(r)}); continue; }
            Q c = r.linear_coeff(*best);
            r *= Q(1) / c;
            for (auto& [pid, pr] : pivots) {
                Q cc = pr.linear_coeff(*best);
                if (cc != 0) pr.axpy(-cc, r);
            }
            pivots.emplace_back(*best, std::move(r));
        }
        for (auto& [pid, pr] : pivots) {
            ParamPoly e = ParamPoly::var(pid) - pr;
            for (auto& [m, c] : e.t)
                for (auto& [q, x] : m)
                    if (!freeset.count(q))
                        throw Error("moduli_solver", "NonTriangularEquation",
                                    "weight " + std::to_string(w) + ": " + P.render(pid) + " depends on " + P.render(q));
            const int d = e.zero() ? 0 : std::min(e.degree(), 3);
            M.classes[d] += 1;
            M.eliminations[pid] = std::move(e);
            M.elimination_order.push_back(pid);
        }
    }
    M.residual_candidates = candidates.size();

    // Keep a candidate only if it is not in the ideal of those kept so far.
    // Everything is isobaric with positive weights, so membership in weight w
    // is linear algebra on {monomial * theta}.
    std::vector<int> fw;
    for (auto id : T.free) fw.push_back(P.weight(id));
    auto monomials_of_weight = [&](int w) {
        std::vector<PMono> out;
        PMono cur;
        std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
            if (left == 0) { out.push_back(cur); return; }
            if (k == T.free.size()) return;
            for (unsigned e = 0; static_cast<int>(e) * fw[k] <= left; ++e) {
                if (e) cur.emplace_back(T.free[k], e);
                rec(k + 1, left - static_cast<int>(e) * fw[k]);
                if (e) cur.pop_back();
            }
        };
        rec(0, w);
        for (auto& m : out) std::sort(m.begin(), m.end());
        return out;
    };
    // One span per weight; a kept candidate is its own row there.
    using Span = SparseRref<PMono, std::greater<PMono>>;
    std::stable_sort(candidates.begin(), candidates.end(), [](auto& a, auto& b) { return a.weight < b.weight; });
    std::optional<Span> span;
    int span_w = -1;
    for (auto& c : candidates) {
        if (c.weight != span_w) {
            span.emplace(std::greater<PMono>(), false);
            span_w = c.weight;
            for (auto& th : M.residual)
                for (auto& m : monomials_of_weight(c.weight - th.weight)) {
                    ParamPoly mono;
                    mono.t[m] = 1;
                    ParamPoly row = mono * th.eq;
                    span->add(Span::Row(row.t.begin(), row.t.end()));
                }
        }
        if (span->add(Span::Row(c.eq.t.begin(), c.eq.t.end()))) M.residual.push_back(c);
        else ++M.absorbed;
    }
    return M;
}

// each coordinate scaled by scale^weight
inline std::map<std::uint32_t, Q> gm_action(const ParamTable& P, const Q& scale, const std::map<std::uint32_t, Q>& point) {
    if (scale == 0) throw input_error("moduli_solver", "ZeroScale", "the G_m action needs a nonzero scale");
    std::map<std::uint32_t, Q> out;
    for (auto& [id, v] : point) {
        Q f = 1;
        for (int k = 0; k < P.weight(id); ++k) f *= scale;
        out[id] = v * f;
    }
    return out;
}

struct ChartResult {
    std::uint32_t chart = 0;
    int dimension = 0;
    bool conclusive = false;  // every residual equation consumed
    std::map<std::uint32_t, ParamPoly> solved;  // in the remaining free names (chart set to 1)
    std::vector<std::uint32_t> solve_order;
    std::size_t pending = 0;
};

// On {chart = 1}, repeatedly solve a residual equation for a parameter that
// occurs in exactly one of its terms, linearly, with a constant coefficient.
// Without such a pivot the count is only an upper bound.
inline ChartResult chart_dimension(const ModuliPresentation& M, const GeneratorSet& G, std::uint32_t chart) {
    const ParamTable& P = G.params();
    if (P.weight(chart) == 0) throw input_error("moduli_solver", "ZeroWeightChart", "chart parameter has weight 0");
    ChartResult out;
    out.chart = chart;
    std::map<std::uint32_t, ParamPoly> one{{chart, ParamPoly::constant(1)}};
    std::vector<ParamPoly> pending;
    for (auto& r : M.residual) pending.push_back(substitute(r.eq, one));
    for (bool progress = true; progress;) {
        progress = false;
        std::vector<ParamPoly> left;
        for (auto& th : pending) {
            ParamPoly f = substitute(th, out.solved);
            if (f.zero()) continue;
            std::optional<std::uint32_t> best;
            for (auto& [m, c] : f.t) {
                if (m.size() != 1 || m[0].second != 1) continue;
                const auto id = m[0].first;
                if (out.solved.count(id) || id == chart) continue;
                int uses = 0;
                for (auto& [m2, c2] : f.t)
                    for (auto& pe : m2)
                        if (pe.first == id) ++uses;
                if (uses != 1) continue;
                auto key = [&](std::uint32_t q) { return std::make_pair(P.weight(q), G.param_gen(q)); };
                if (!best || key(id) > key(*best)) best = id;
            }
            if (!best) { left.push_back(std::move(f)); continue; }
            Q c = f.linear_coeff(*best);
            ParamPoly e = f;
            e.t.erase(pm1(*best));
            e *= Q(-1) / c;
            std::map<std::uint32_t, ParamPoly> sub{{*best, e}};
            for (auto& [q, x] : out.solved) x = substitute(x, sub);
            out.solved[*best] = e;
            out.solve_order.push_back(*best);
            progress = true;
        }
        pending = std::move(left);
    }
    out.pending = pending.size();
    out.conclusive = pending.empty();
    out.dimension = static_cast<int>(M.free.size()) - 1 - static_cast<int>(out.solved.size());
    return out;
}

// one chart per free parameter, in label order
inline std::vector<ChartResult> all_charts(const ModuliPresentation& M, const GeneratorSet& G) {
    std::vector<ChartResult> out;
    for (auto id : M.free) out.push_back(chart_dimension(M, G, id));
    return out;
}

// The headline chart: c_{14,5} at genus 6, else
// the first conclusive chart in label order.
inline std::optional<std::size_t> headline_chart(const std::vector<ChartResult>& charts, const GeneratorSet& G) {
    if (G.ctx().g() == 6) {
        auto id = G.find_param('c', 14, 0, 5);
        for (std::size_t k = 0; k < charts.size(); ++k)
            if (id && charts[k].chart == *id) return k;
    }
    for (std::size_t k = 0; k < charts.size(); ++k)
        if (charts[k].conclusive) return k;
    return std::nullopt;
}

}  // namespace gmod
