#pragma once
// End-to-end run: semigroup -> generators -> syzygies -> deformation ->
// residues -> T^{1,-} -> moduli presentation -> verification, plus reports.

#include "verify.hpp"

#include "json.hpp"

#include <functional>
#include <memory>
#include <sstream>

namespace gmod {

struct Options {
    std::vector<int> generators;
    std::string normalization_file;  // empty: default normalizations
    int max_check_degree = 4;
    int samples = 20;
    std::uint64_t seed = 1;
    std::function<void(const std::string&)> progress;  // diagnostics, never the report
};

inline std::vector<int> parse_generator_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw input_error("cli", "BadGenerators", "empty entry in '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || used == 0) throw input_error("cli", "BadGenerators", "'" + item + "' is not an integer");
        if (v <= 0 || v > 1000000) throw input_error("semigroup", "NonPositiveGenerator", "'" + item + "' is out of range");
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw input_error("semigroup", "EmptyGenerators", "no generators given");
    return out;
}

struct Analysis {
    Semigroup S;
    std::shared_ptr<GeneratorSet> G;
    SyzygySet syz;
    std::vector<SyzygyRelation> relations;
    std::vector<std::uint32_t> normalization;
    DeformedSet D;
    ResidueSystem R;
    std::vector<LinearEq> linear;
    GradedDims T;
    ModuliPresentation M;
    std::vector<ChartResult> charts;
    std::optional<std::size_t> headline;
    VerificationSummary verification;
};

inline Analysis analyze(const Options& opt) {
    auto say = [&](const std::string& s) { if (opt.progress) opt.progress(s); };
    if (opt.max_check_degree < 2 || opt.max_check_degree > 4)
        throw input_error("cli", "BadCheckDegree", "--max-check-degree must be 2, 3 or 4");
    if (opt.samples < 0) throw input_error("cli", "BadSamples", "--samples must be nonnegative");
    Analysis A;
    A.S = from_generators(opt.generators);
    require_odd(A.S, "semigroup");
    if (!is_symmetric(A.S)) throw input_error("semigroup", "NotSymmetric", "semigroup is not symmetric");
    say("semigroup: genus " + std::to_string(A.S.genus));
    A.G = std::make_shared<GeneratorSet>(A.S);
    say("canonical_ideal: " + std::to_string(A.G->quadratic_count()) + " quadrics, " + std::to_string(A.G->cubic_count()) + " cubics");
    A.syz = build_syzygies(*A.G);
    A.relations = A.syz.all();
    say("syzygy: " + std::to_string(A.relations.size()) + " relations");
    A.normalization = opt.normalization_file.empty() ? default_normalizations(*A.G)
                                                     : read_normalization_file(opt.normalization_file, *A.G);
    A.D = pre_deform(*A.G, A.normalization);
    A.R = residue_system(A.D, A.relations);
    say("deformation: " + std::to_string(A.R.entries.size()) + " equations in " + std::to_string(A.R.parameters) + " parameters");
    A.linear = linearize(A.R);
    A.T = solve_T1(A.linear, A.D, pivot_order(A.D));
    say("tangent: dim T1 = " + std::to_string(A.T.free.size()));
    A.M = solve_by_weight(A.R, A.T, A.D);
    say("moduli_solver: " + std::to_string(A.M.eliminations.size()) + " eliminations, " + std::to_string(A.M.residual.size()) + " residual");
    A.charts = all_charts(A.M, *A.G);
    A.headline = headline_chart(A.charts, *A.G);
    Rng rng(opt.seed);
    const ChartResult* chart = nullptr;
    if (!A.M.residual.empty() && A.headline) chart = &A.charts[*A.headline];
    if (!A.M.residual.empty() && !chart) {
        // no chart solves the residual equations, so there is nothing to sample
        A.verification.max_degree = opt.max_check_degree;
        A.verification.skipped = "no conclusive chart";
        say("verify: skipped, no conclusive chart");
        return A;
    }
    A.verification = run_verification(A.D, A.R, A.relations, A.M, chart, opt.samples, opt.max_check_degree, rng);
    say("verify: " + std::to_string(A.verification.passed) + "/" + std::to_string(A.verification.samples) + " points pass");
    return A;
}

inline nlohmann::ordered_json to_json(const Analysis& A) {
    using nlohmann::ordered_json;
    const GeneratorSet& G = *A.G;
    const ParamTable& P = G.params();
    ordered_json j;
    j["semigroup"] = {{"generators", A.S.generators}, {"genus", A.S.genus},     {"gaps", A.S.gaps},
                      {"frobenius", A.S.frobenius},   {"nongaps", A.S.nongaps}, {"symmetric", is_symmetric(A.S)},
                      {"odd_type", is_odd_type(A.S)}};
    const auto cc = cubic_counts(A.S);
    j["counts"] = {{"quadratics", G.quadratic_count()}, {"cubics", G.cubic_count()}, {"eta", cc.eta}, {"wp", cc.wp}};
    ordered_json gens = ordered_json::array();
    for (std::size_t k = 0; k < G.size(); ++k) gens.push_back(G.render_initial(k));
    j["generators"] = gens;
    ordered_json sq = ordered_json::array(), sc = ordered_json::array();
    for (auto& R : A.syz.quadratic) sq.push_back(render(R, G));
    for (auto& R : A.syz.cubic) sc.push_back(render(R, G));
    j["syzygies"] = {{"quadratic", sq}, {"cubic", sc}};
    ordered_json norm = ordered_json::array();
    for (auto id : A.normalization) norm.push_back(P.render(id));
    j["normalizations"] = norm;
    j["residue"] = {{"equations", A.R.entries.size()},
                    {"parameters", A.R.parameters},
                    {"redundant", A.M.redundant},
                    {"linear_rows", A.linear.size()},
                    {"linear_rank", A.T.rank}};
    ordered_json dims = ordered_json::object();
    for (auto& [w, d] : A.T.dims) dims[std::to_string(w)] = d;
    ordered_json fr = ordered_json::array();
    for (auto id : A.T.free) fr.push_back({{"name", P.render(id)}, {"weight", P.weight(id)}});
    j["t1"] = {{"dim", A.T.free.size()}, {"dims_by_weight", dims}, {"alpha", A.T.alpha}, {"free", fr}};

    std::vector<std::uint32_t> elim_ids;
    for (auto& [id, e] : A.M.eliminations) elim_ids.push_back(id);
    std::sort(elim_ids.begin(), elim_ids.end(), [&](auto a, auto b) { return label_key(G, a) < label_key(G, b); });
    ordered_json el = ordered_json::object();
    for (auto id : elim_ids) el[P.render(id)] = P.render(A.M.eliminations.at(id));
    ordered_json res = ordered_json::array();
    for (auto& r : A.M.residual) res.push_back({{"weight", r.weight}, {"equation", P.render(r.eq)}});
    ordered_json charts = ordered_json::array();
    for (auto& c : A.charts) {
        ordered_json solved = ordered_json::object();
        for (auto id : c.solve_order) solved[P.render(id)] = P.render(c.solved.at(id));
        charts.push_back({{"chart", P.render(c.chart)},
                          {"weight", P.weight(c.chart)},
                          {"dimension", c.dimension},
                          {"conclusive", c.conclusive},
                          {"solved", solved}});
    }
    j["moduli"] = {{"eliminations", el},
                   {"elimination_classes",
                    {{"zero", A.M.classes[0]}, {"linear", A.M.classes[1]}, {"quadratic", A.M.classes[2]}, {"higher", A.M.classes[3]}}},
                   {"residual", res},
                   {"residual_candidates", A.M.residual_candidates},
                   {"absorbed", A.M.absorbed},
                   {"chart_dimensions", charts},
                   {"headline_chart", A.headline ? ordered_json(P.render(A.charts[*A.headline].chart)) : ordered_json()}};
    const auto& v = A.verification;
    j["verification"] = {{"samples", v.samples},
                         {"passed", v.passed},
                         {"perturbed", v.perturbed},
                         {"perturbed_detected", v.perturbed_detected},
                         {"max_check_degree", v.max_degree},
                         {"chart_points", v.used_chart},
                         {"skipped", v.skipped.empty() ? ordered_json() : ordered_json(v.skipped)}};
    j["t1_dim"] = A.T.free.size();
    j["alpha"] = A.T.alpha;
    j["residual_count"] = A.M.residual.size();
    j["chart_dimension"] = A.headline ? ordered_json(A.charts[*A.headline].dimension) : ordered_json();
    return j;
}

inline std::string to_text(const Analysis& A) {
    const GeneratorSet& G = *A.G;
    const ParamTable& P = G.params();
    std::ostringstream o;
    o << "Semigroup <";
    for (std::size_t k = 0; k < A.S.generators.size(); ++k) o << (k ? "," : "") << A.S.generators[k];
    o << ">, genus " << A.S.genus << ", Frobenius " << A.S.frobenius << "\n\n";
    o << "Generators (" << G.quadratic_count() << " quadratic, " << G.cubic_count() << " cubic):\n";
    for (std::size_t k = 0; k < G.size(); ++k) o << "  " << G.render_initial(k) << "\n";
    o << "\nSyzygies:\n";
    for (auto& R : A.relations) o << "  " << render(R, G) << "\n";
    o << "\nNormalized to 0:";
    for (auto id : A.normalization) o << " " << P.render(id);
    o << "\n\nResidue system: " << A.R.entries.size() << " equations in " << A.R.parameters << " parameters, "
      << A.linear.size() << " nonzero linear parts (rank " << A.T.rank << ")\n";
    o << "\nT^{1,-}: dimension " << A.T.free.size() << "\n";
    for (auto& [w, d] : A.T.dims) o << "  dim T^{1,-}_{-" << w << "} = " << d << "\n";
    o << "  alpha = (";
    for (std::size_t k = 0; k < A.T.alpha.size(); ++k) o << (k ? "," : "") << A.T.alpha[k];
    o << ")\n  free:";
    for (auto id : A.T.free) o << " " << P.render(id);
    o << "\n\nEliminations (" << A.M.classes[0] << " zero, " << A.M.classes[1] << " linear, " << A.M.classes[2]
      << " quadratic, " << A.M.classes[3] << " higher; " << A.M.redundant << " redundant equations):\n";
    for (auto id : A.M.elimination_order) o << "  " << P.render(id) << " = " << P.render(A.M.eliminations.at(id)) << "\n";
    o << "\nResidual equations: " << A.M.residual.size() << "\n";
    for (auto& r : A.M.residual) o << "  theta_" << r.weight << " = " << P.render(r.eq) << "\n";
    o << "\nCharts:\n";
    for (auto& c : A.charts)
        o << "  " << P.render(c.chart) << " = 1: dimension " << c.dimension << (c.conclusive ? "" : " (upper bound)") << "\n";
    if (A.headline) {
        const auto& c = A.charts[*A.headline];
        o << "\nOn " << P.render(c.chart) << " = 1:\n";
        for (auto id : c.solve_order) o << "  " << P.render(id) << " = " << P.render(c.solved.at(id)) << "\n";
    }
    const auto& v = A.verification;
    if (!v.skipped.empty()) {
        o << "\nVerification skipped: " << v.skipped << "\n";
        return o.str();
    }
    o << "\nVerification: " << v.passed << "/" << v.samples << " solved points pass, " << v.perturbed_detected << "/"
      << v.perturbed << " perturbed points rejected\n";
    return o.str();
}

}  // namespace gmod
