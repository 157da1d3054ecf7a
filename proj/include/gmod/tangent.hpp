#pragma once
// Linearization of the obstruction equations and the graded tangent space
// T^{1,-} (free parameters, dimensions by weight, weight vector alpha).

#include "deformation.hpp"

namespace gmod {

struct LinearEq {
    int weight;
    ParamPoly lin;
};

inline std::vector<LinearEq> linearize(const ResidueSystem& R) {
    std::vector<LinearEq> out;
    for (auto& e : R.entries) {
        auto l = e.eq.linear_part();
        if (!l.zero()) out.push_back({e.weight, std::move(l)});
    }
    return out;
}

// Pivot order: parameters earlier in the list are eliminated first, so the
// tail of the list stays free. For genus 5 and 6 the tail is a pinned
// list of preferred free coefficients.
inline std::vector<std::uint32_t> pivot_order(const DeformedSet& D) {
    const GeneratorSet& G = *D.G;
    static const std::vector<ParamRef> g5 = {
        {'d', 15, 0, 2}, {'d', 15, 0, 3}, {'c', 12, 0, 4}, {'d', 15, 0, 4}, {'d', 15, 0, 5},
        {'c', 12, 0, 6}, {'c', 13, 0, 7}, {'d', 15, 0, 8}, {'d', 15, 0, 9}, {'d', 15, 0, 10}};
    static const std::vector<ParamRef> g6 = {
        {'d', 18, 0, 12}, {'d', 18, 0, 11}, {'c', 15, 0, 8}, {'c', 16, 1, 9}, {'c', 16, 1, 8},
        {'c', 15, 0, 7}, {'c', 14, 0, 6}, {'d', 18, 0, 6}, {'d', 18, 0, 10}, {'c', 14, 0, 5},
        {'d', 18, 0, 5}, {'c', 14, 0, 4}, {'d', 18, 0, 4}, {'d', 18, 0, 3}, {'c', 14, 0, 2}};
    const int g = G.ctx().g();
    std::vector<std::uint32_t> order = D.active;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return label_key(G, a) < label_key(G, b); });
    const auto* pref = g == 5 ? &g5 : g == 6 ? &g6 : nullptr;
    if (!pref) return order;
    std::vector<std::uint32_t> tail;
    for (auto& r : *pref) {
        auto id = G.find_param(r.kind, r.s, r.i, r.w);
        // a custom normalization may have removed a preferred name
        if (id && !D.normalized.count(*id)) tail.push_back(*id);
    }
    std::vector<std::uint32_t> head;
    for (auto id : D.active)
        if (std::find(tail.begin(), tail.end(), id) == tail.end()) head.push_back(id);
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

struct PositionLess {
    const std::vector<int>* pos;
    bool operator()(std::uint32_t a, std::uint32_t b) const { return (*pos)[a] < (*pos)[b]; }
};

struct GradedDims {
    std::vector<std::uint32_t> free;           // sorted by label
    std::map<int, int> dims;                   // weight -> dimension
    std::vector<int> alpha;                    // sorted free weights
    std::map<std::uint32_t, ParamPoly> eliminations;  // linear, in free names
    std::vector<std::uint32_t> order;          // pivot order used
    std::size_t rank = 0;
};

inline GradedDims solve_T1(const std::vector<LinearEq>& sys, const DeformedSet& D, std::vector<std::uint32_t> order) {
    const GeneratorSet& G = *D.G;
    const ParamTable& P = G.params();
    std::vector<int> pos(P.names.size(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
    using Rref = SparseRref<std::uint32_t, PositionLess>;
    Rref M(PositionLess{&pos});
    for (auto& e : sys) {
        if (e.lin.t.count({})) throw Error("tangent", "InconsistentLinearSystem", "constant term in a linear equation");
        Rref::Row row(PositionLess{&pos});
        for (auto& [m, c] : e.lin.t) {
            const auto id = m[0].first;
            if (pos[id] < 0) throw Error("tangent", "UnknownParameter", P.render(id) + " is normalized or unknown");
            if (P.weight(id) != e.weight) throw Error("tangent", "NotIsobaric", "linear equation mixes weights");
            row[id] = c;
        }
        M.add(std::move(row));
    }
    GradedDims T;
    T.order = order;
    T.rank = M.rank();
    for (auto id : D.active)
        if (!M.is_pivot(id)) T.free.push_back(id);
    std::sort(T.free.begin(), T.free.end(), [&](auto a, auto b) { return label_key(G, a) < label_key(G, b); });
    for (auto id : T.free) {
        T.dims[P.weight(id)] += 1;
        T.alpha.push_back(P.weight(id));
    }
    std::sort(T.alpha.begin(), T.alpha.end());
    for (auto& [p, row] : M.pivots()) {
        ParamPoly e;
        for (auto& [q, c] : row)
            if (q != p) e.add_term({{q, 1}}, -c);
        T.eliminations[p] = std::move(e);
    }
    return T;
}

inline GradedDims solve_T1(const ResidueSystem& R, const DeformedSet& D) {
    return solve_T1(linearize(R), D, pivot_order(D));
}

}  // namespace gmod
