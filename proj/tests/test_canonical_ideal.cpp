#include "doctest.h"
#include "support.hpp"

using namespace gmod;

namespace {

const GeneratorSet& gs(int g) {
    static std::map<int, std::unique_ptr<GeneratorSet>> cache;
    auto& p = cache[g];
    if (!p) p = std::make_unique<GeneratorSet>(from_generators(gmt::odd_generators(g)));
    return *p;
}

std::vector<std::string> rendered(const GeneratorSet& G) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < G.size(); ++k) out.push_back(G.render_initial(k));
    return out;
}

XForm random_form(const Ctx& C, int deg, Rng& rng, int terms) {
    auto mons = C.monomials(deg);
    XForm f;
    for (int t = 0; t < terms; ++t)
        f.add_term(mons[rng.uniform(0, static_cast<std::int64_t>(mons.size()) - 1)], ParamPoly::constant(rng.rational(9)));
    return f;
}

}  // namespace

TEST_CASE("initial forms, genus 5") {
    const GeneratorSet& G = gs(5);
    CHECK(G.quadratic_count() == 3);
    CHECK(G.cubic_count() == 4);
    CHECK(rendered(G) == std::vector<std::string>{
                             "F_{12}^(0) = X_6^2 - X_5*X_7",
                             "F_{13}^(0) = X_6*X_7 - X_5*X_8",
                             "F_{14}^(0) = X_7^2 - X_6*X_8",
                             "G_{15}^(0) = X_5^3 - X_0*X_7*X_8",
                             "G_{16}^(0) = X_5^2*X_6 - X_0*X_8^2",
                             "G_{18}^(0) = X_6^3 - X_5^2*X_8",
                             "G_{21}^(0) = X_7^3 - X_5*X_8^2",
                         });
}

TEST_CASE("initial forms, genus 6") {
    const GeneratorSet& G = gs(6);
    CHECK(G.quadratic_count() == 6);
    CHECK(G.cubic_count() == 8);
    auto r = rendered(G);
    auto has = [&](const std::string& s) { return std::find(r.begin(), r.end(), s) != r.end(); };
    CHECK(has("F_{16,1}^(0) = X_7*X_9 - X_6*X_10"));
    CHECK(has("F_{16,2}^(0) = X_8^2 - X_6*X_10"));
    CHECK(has("G_{20,1}^(0) = X_6*X_7^2 - X_0*X_10^2"));
    CHECK(has("G_{20,2}^(0) = X_6^2*X_8 - X_0*X_10^2"));
    CHECK_THROWS_WITH_AS(GeneratorSet(from_generators({4, 5, 6})), doctest::Contains("GenusTooSmall"), Error);
    CHECK_THROWS_WITH_AS(GeneratorSet(from_generators({3, 5})), doctest::Contains("NotOddType"), Error);
}

TEST_CASE("every initial binomial vanishes on the monomial curve and has the expected shape") {
    for (int g = 5; g <= 10; ++g) {
        const GeneratorSet& G = gs(g);
        const Ctx& C = G.ctx();
        for (std::size_t k = 0; k < G.size(); ++k) {
            CHECK(substitute_t(G.initial()[k]).empty());
            CHECK(C.in_basis(G.gen(k).base));
            CHECK_FALSE(C.in_basis(G.gen(k).lead));
            CHECK(G.gen(k).lead.wt == G.gen(k).s);
        }
        // parameters: one per basis monomial of smaller weight
        std::size_t expected = 0;
        for (auto& gen : G.gens())
            for (auto& [w, m] : C.basis(gen.deg)) expected += w < gen.s;
        CHECK(G.params().names.size() == expected);
    }
    CHECK(gs(5).params().names.size() == 74);
}

TEST_CASE("divide: documented examples") {
    const GeneratorSet& G = gs(5);
    const Ctx& C = G.ctx();
    auto cert = divide(monomial_form(C.mono({7, 7})), G, G.initial(), {.verify = true});
    REQUIRE(cert.quotients.size() == 1);
    CHECK(cert.quotients.begin()->first == G.at('c', 14));
    CHECK(cert.quotients.begin()->second == monomial_form(C.one()));
    CHECK(cert.remainder == monomial_form(C.mono({6, 8})));

    auto basis = divide(monomial_form(C.mono({5, 8})), G, G.initial());
    CHECK(basis.quotients.empty());
    CHECK(basis.remainder == monomial_form(C.mono({5, 8})));

    auto cube = divide(monomial_form(C.mono({6, 7, 8})), G, G.initial(), {.verify = true});
    REQUIRE(cube.remainder.t.size() == 1);
    const XMono& r = cube.remainder.t.begin()->first;
    CHECK(r.wt == 21);
    CHECK(C.in_basis(r));
    CHECK(r == C.basis(3).at(21));
    CHECK(cube.remainder.t.begin()->second == ParamPoly::constant(1));

    CHECK_THROWS_WITH_AS(divide(monomial_form(C.mono({5, 5, 5, 5, 5})), G, G.initial()), doctest::Contains("DegreeTooHigh"),
                         Error);
}

// I_r and span(Lambda_r) are complementary, so the remainder is unique:
// any rewriting order must give the same one.
TEST_CASE("division is confluent and certificates add up") {
    Rng rng(17);
    for (int g : {5, 6}) {
        const GeneratorSet& G = gs(g);
        for (int trial = 0; trial < 60; ++trial) {
            const int d = static_cast<int>(rng.uniform(2, 4));
            XForm f = random_form(G.ctx(), d, rng, 6);
            auto a = divide(f, G, G.initial(), {.verify = true});
            DivideOptions opt;
            opt.random_order = &rng;
            opt.verify = true;
            auto b = divide(f, G, G.initial(), opt);
            CHECK(a.remainder == b.remainder);
            for (auto& [m, c] : a.remainder.t) CHECK(G.ctx().in_basis(m));
        }
    }
}

TEST_CASE("ideal membership") {
    const GeneratorSet& G = gs(5);
    const Ctx& C = G.ctx();
    for (auto& f : G.initial()) CHECK(ideal_membership(f, G));
    CHECK_FALSE(ideal_membership(monomial_form(C.mono({0, 8})), G));
    const auto& F = G.initial();
    XForm s = monomial_form(C.var(8)) * F[G.at('c', 12)] - monomial_form(C.var(7)) * F[G.at('c', 13)] +
              monomial_form(C.var(6)) * F[G.at('c', 14)];
    CHECK(s.zero());
    CHECK(ideal_membership(s, G));
    // products of generators with anything stay inside
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        XForm h = random_form(C, 1, rng, 3);
        CHECK(ideal_membership(h * F[rng.uniform(0, static_cast<std::int64_t>(F.size()) - 1)], G));
    }
}

TEST_CASE("Hilbert codimension of the monomial curve") {
    for (int g = 5; g <= 7; ++g) {
        const GeneratorSet& G = gs(g);
        for (int r = 2; r <= 4; ++r) {
            const long want = binomial(r + g - 1, r) - ((2L * g - 2) * r + 1 - g);
            CAPTURE(g);
            CAPTURE(r);
            CHECK(hilbert_codim(G, G.initial(), r) == want);
        }
    }
    CHECK(hilbert_codim(gs(5), gs(5).initial(), 2) == 3);
    CHECK(hilbert_codim(gs(5), gs(5).initial(), 3) == 15);
}

// The structured count must agree with plain elimination on the spanning set.
TEST_CASE("structured Hilbert rank matches plain elimination") {
    Rng rng(23);
    for (int g : {5, 6}) {
        const GeneratorSet& G = gs(g);
        // perturb every generator by random tails on lower monomials of the
        // same degree, keeping the leads
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<XForm> forms;
            std::vector<NumForm> nf;
            for (std::size_t k = 0; k < G.size(); ++k) {
                XForm f = G.initial()[k];
                for (auto& [w, m] : G.ctx().basis(G.gen(k).deg))
                    if (w < G.gen(k).s && rng.uniform(0, 2) == 0) f.add_term(m, ParamPoly::constant(rng.rational(5)));
                forms.push_back(f);
                nf.push_back(to_numeric(f));
            }
            for (int r = 2; r <= 4; ++r) CHECK(hilbert_codim(G, forms, r) == span_rank(G.ctx(), nf, r));
        }
    }
}
