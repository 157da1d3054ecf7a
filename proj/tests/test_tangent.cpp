#include "doctest.h"
#include "support.hpp"

#include <random>

using namespace gmod;

namespace {

const GeneratorSet& gs(int g) {
    static std::map<int, std::unique_ptr<GeneratorSet>> cache;
    auto& p = cache[g];
    if (!p) p = std::make_unique<GeneratorSet>(from_generators(gmt::odd_generators(g)));
    return *p;
}

SparseRref<std::uint32_t>::Row as_row(const ParamPoly& lin) {
    SparseRref<std::uint32_t>::Row r;
    for (auto& [m, c] : lin.t) r[m.at(0).first] = c;
    return r;
}

// All first syzygies of the initial ideal in degree d, by brute-force kernel
// computation: columns are (generator k, monomial mu) with deg mu = d - deg F_k.
std::vector<std::vector<std::pair<std::size_t, std::pair<XMono, Q>>>> syzygy_kernel(const GeneratorSet& G, int d) {
    const Ctx& C = G.ctx();
    std::map<XMono, int> index;
    for (auto& m : C.monomials(d)) index.emplace(m, static_cast<int>(index.size()));
    std::vector<std::pair<std::size_t, XMono>> cols;
    for (std::size_t k = 0; k < G.size(); ++k)
        if (G.gen(k).deg <= d)
            for (auto& mu : C.monomials(d - G.gen(k).deg)) cols.push_back({k, mu});

    // (0, monomial) keys come before (1, column tag) keys; a row whose
    // monomial part cancels is a kernel vector in the tags
    using Key = std::pair<int, int>;
    SparseRref<Key> E({}, false);
    std::vector<std::vector<std::pair<std::size_t, std::pair<XMono, Q>>>> out;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        SparseRref<Key>::Row row;
        for (auto& [m, c] : G.initial()[cols[j].first].t) row[{0, index.at(m * cols[j].second)}] = c.constant_term();
        row[{1, static_cast<int>(j)}] = 1;
        auto r = E.reduce(row);
        if (!r.empty() && r.begin()->first.first == 1) {
            std::vector<std::pair<std::size_t, std::pair<XMono, Q>>> h;
            for (auto& [key, c] : r) h.push_back({cols[key.second].first, {cols[key.second].second, c}});
            out.push_back(std::move(h));
        } else {
            E.add(std::move(row));
        }
    }
    return out;
}

// First-order conditions from every syzygy of degree <= max_deg: the
// perturbation sum h_k f_k must lie in the initial ideal.
SparseRref<std::uint32_t> full_linear_span(const DeformedSet& D, int max_deg) {
    const GeneratorSet& G = *D.G;
    SparseRref<std::uint32_t> S({}, false);
    for (int d = 3; d <= max_deg; ++d)
        for (auto& h : syzygy_kernel(G, d)) {
            XForm sum;
            for (auto& [k, mc] : h) {
                XForm tail = D.forms[k] - G.initial()[k];
                sum.add_scaled(tail, mc.first, mc.second);
            }
            for (auto& [m, c] : divide(sum, G, G.initial()).remainder.t) S.add(as_row(c));
        }
    return S;
}

}  // namespace

TEST_CASE("graded tangent dimensions, genus 5") {
    const Analysis& A = gmt::analysis(5);
    const GradedDims& T = A.T;
    CHECK(T.free.size() == 10);
    CHECK(T.alpha == std::vector<int>{2, 3, 4, 4, 5, 6, 7, 8, 9, 10});
    CHECK(T.dims == std::map<int, int>{{2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}, {10, 1}});
    CHECK(T.rank + T.free.size() == 64);
    CHECK(static_cast<int>(T.free.size()) - 1 == 2 * 5 - 1);
}

TEST_CASE("graded tangent dimensions, genus 6") {
    const Analysis& A = gmt::analysis(6);
    const GradedDims& T = A.T;
    CHECK(T.free.size() == 15);
    CHECK(T.alpha == std::vector<int>{2, 3, 4, 4, 5, 5, 6, 6, 7, 8, 8, 9, 10, 11, 12});
    auto got = gmt::names((*A.G), T.free);
    std::set<std::string> have(got.begin(), got.end());
    // the preferred free coordinates: a_j and b_i in the short notation
    for (auto n : {"c_{14,2}", "c_{14,4}", "c_{14,5}", "c_{14,6}", "c_{15,7}", "c_{15,8}", "c_{16,1,8}", "c_{16,1,9}",
                   "d_{18,3}", "d_{18,4}", "d_{18,5}", "d_{18,6}", "d_{18,10}", "d_{18,11}", "d_{18,12}"})
        CHECK(have.count(n) == 1);
}

TEST_CASE("genus 5 linear relations lie in the row span") {
    const Analysis& A = gmt::analysis(5);
    const GeneratorSet& G = (*A.G);
    SparseRref<std::uint32_t> S;
    for (auto& e : linearize(A.R)) S.add(as_row(e.lin));
    auto p = [&](const char* n) { return ParamPoly::var(parse_param_name(n, G)); };
    CHECK(S.reduce(as_row(p("d_{16,10}") - p("d_{15,10}"))).empty());
    CHECK(S.reduce(as_row(p("c_{14,4}") + p("c_{12,4}"))).empty());
    // and a combination that is not forced
    CHECK_FALSE(S.reduce(as_row(p("c_{14,4}") - p("c_{12,4}"))).empty());
}

TEST_CASE("solve_T1 edge cases") {
    const GeneratorSet& G = gs(5);
    auto D = pre_deform(G, default_normalizations(G));
    auto T = solve_T1({}, D, pivot_order(D));
    CHECK(T.free.size() == D.active.size());
    CHECK(T.rank == 0);
    CHECK(T.eliminations.empty());

    const auto c124 = G.param('c', 12, 0, 4), d154 = G.param('d', 15, 0, 4), c135 = G.param('c', 13, 0, 5);
    CHECK_THROWS_WITH_AS(solve_T1({{4, ParamPoly::var(c124) + ParamPoly::constant(1)}}, D, pivot_order(D)),
                         doctest::Contains("InconsistentLinearSystem"), Error);
    CHECK_THROWS_WITH_AS(solve_T1({{1, ParamPoly::var(G.param('c', 12, 0, 1))}}, D, pivot_order(D)),
                         doctest::Contains("UnknownParameter"), Error);
    CHECK_THROWS_WITH_AS(solve_T1({{4, ParamPoly::var(c124) + ParamPoly::var(c135)}}, D, pivot_order(D)),
                         doctest::Contains("NotIsobaric"), Error);
    auto one = solve_T1({{4, ParamPoly::var(c124) - ParamPoly::var(d154)}}, D, pivot_order(D));
    CHECK(one.rank == 1);
    CHECK(one.free.size() == D.active.size() - 1);
}

// Graded dimensions do not depend on which coefficients are kept free.
TEST_CASE("dimensions are independent of the pivot order") {
    std::mt19937 rng(99);
    for (int g : {5, 6}) {
        const Analysis& A = gmt::analysis(g);
        auto lin = linearize(A.R);
        for (int trial = 0; trial < 4; ++trial) {
            auto order = A.D.active;
            std::shuffle(order.begin(), order.end(), rng);
            auto T = solve_T1(lin, A.D, order);
            CHECK(T.dims == A.T.dims);
            CHECK(T.alpha == A.T.alpha);
        }
    }
}

// Oracle: the first-order conditions coming from the whole syzygy module
// (computed as a kernel, degrees 3 and 4) cut out the same tangent space as
// the chosen relations.
TEST_CASE("tangent space agrees with the full syzygy module") {
    for (int g : {5, 6}) {
        CAPTURE(g);
        const Analysis& A = gmt::analysis(g);
        auto full = full_linear_span(A.D, 4);
        CHECK(A.D.active.size() - full.rank() == A.T.free.size());
        // same row space, not just the same rank
        for (auto& e : linearize(A.R)) CHECK(full.reduce(as_row(e.lin)).empty());
    }
}

// Without normalization the shifts contribute g(g-1)/2 trivial directions.
TEST_CASE("unnormalized tangent space") {
    for (int g : {5, 6}) {
        CAPTURE(g);
        const GeneratorSet& G = gs(g);
        auto D = pre_deform(G, {});
        auto R = residue_system(D, build_syzygies(G).all());
        auto T = solve_T1(R, D);
        const long expected_t1 = g == 5 ? 10 : 15;
        CHECK(static_cast<long>(T.free.size()) - g * (g - 1L) / 2 == expected_t1);
        CHECK(D.active.size() - full_linear_span(D, 4).rank() == T.free.size());
    }
}
