#pragma once
// Pre-deformation of the generators, coefficient normalization and the
// obstruction equations obtained by lifting the syzygies.

#include "syzygy.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <set>

namespace gmod {

// Accepted spellings: "c_{12,4}", "c_{16,1,8}", "d_{15,10}" (last index is the
// weight) and the spaced form "c 12 1 4" (kind, s, i, weight).
inline std::uint32_t parse_param_name(const std::string& text, const GeneratorSet& G) {
    static const std::regex braced(R"(^\s*([cd])_?\{\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*(\d+)\s*)?\}\s*$)");
    static const std::regex spaced(R"(^\s*([cd])\s+(\d+)\s+(\d+)\s+(\d+)\s*$)");
    std::smatch m;
    char kind;
    int s, i, w;
    if (std::regex_match(text, m, braced)) {
        kind = m[1].str()[0];
        s = std::stoi(m[2]);
        if (m[4].matched) { i = std::stoi(m[3]); w = std::stoi(m[4]); }
        else { i = 0; w = std::stoi(m[3]); }
    } else if (std::regex_match(text, m, spaced)) {
        kind = m[1].str()[0];
        s = std::stoi(m[2]);
        i = std::stoi(m[3]);
        w = std::stoi(m[4]);
    } else {
        throw input_error("deformation", "BadParameterName", "cannot parse '" + text + "'");
    }
    auto id = G.find_param(kind, s, i, w);
    if (!id) throw input_error("deformation", "UnknownParameter", "'" + text + "' is not a parameter of this semigroup");
    return *id;
}

inline std::vector<std::uint32_t> read_normalization_file(const std::string& path, const GeneratorSet& G) {
    std::ifstream in(path);
    if (!in) throw input_error("deformation", "UnreadableFile", "cannot open " + path);
    std::vector<std::uint32_t> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_param_name(line, G));
    }
    return out;
}

// Label order used for generic choices: (weight, degree, s, i).
inline auto label_key(const GeneratorSet& G, std::uint32_t id) {
    const ParamName& p = G.params().names[id];
    return std::make_tuple(p.w, p.kind == 'c' ? 2 : 3, p.s, p.i);
}

// Linearized action of the shifts X_{n_i} -> X_{n_i} + lambda*X_{n_j} (j < i)
// on the coefficients: each shift moves the weight n_i - n_j coefficients by
// the normal form of X_{n_j} * dF/dX_{n_i}.
struct ShiftColumn {
    int weight;
    int i, j;
    std::map<std::uint32_t, Q> moves;
};

inline std::vector<ShiftColumn> shift_action(const GeneratorSet& G) {
    const Ctx& C = G.ctx();
    std::vector<ShiftColumn> cols;
    for (int i = 0; i < C.g(); ++i)
        for (int j = 0; j < i; ++j) {
            ShiftColumn col{C.nongap(i) - C.nongap(j), i, j, {}};
            for (std::size_t k = 0; k < G.size(); ++k) {
                XForm df;
                for (auto& [m, c] : G.initial()[k].t) {
                    if (!m.e[i]) continue;
                    XMono mm = m;
                    mm.e[i] -= 1;
                    mm.e[j] += 1;
                    mm.wt += C.nongap(j) - C.nongap(i);
                    df.add_term(mm, Q(m.e[i]) * c);
                }
                auto rem = divide(df, G, G.initial()).remainder;
                for (auto& [Z, c] : rem.t) {
                    auto id = G.find_param(G.gen(k).kind, G.gen(k).s, G.gen(k).nu == 1 ? 0 : G.gen(k).i, G.gen(k).s - Z.wt);
                    if (!id) throw Error("deformation", "ShiftAction", "shift moves a coefficient that does not exist");
                    col.moves[*id] = c.constant_term();
                }
            }
            cols.push_back(std::move(col));
        }
    return cols;
}

// In increasing weight, each shift kills the lowest-label coefficient it
// still moves after eliminating the earlier choices.
inline std::vector<std::uint32_t> greedy_normalizations(const GeneratorSet& G) {
    auto cols = shift_action(G);
    std::stable_sort(cols.begin(), cols.end(), [](auto& a, auto& b) {
        return std::tie(a.weight, a.i, a.j) < std::tie(b.weight, b.i, b.j);
    });
    std::vector<std::uint32_t> chosen;
    std::map<std::uint32_t, std::map<std::uint32_t, Q>> basis;
    for (auto& col : cols) {
        auto v = col.moves;
        for (auto& [p, b] : basis) {
            auto it = v.find(p);
            if (it == v.end()) continue;
            Q c = it->second;
            for (auto& [q, x] : b) {
                Q nv = v[q] - c * x;
                if (nv == 0) v.erase(q);
                else v[q] = nv;
            }
        }
        if (v.empty()) continue;
        auto p = std::min_element(v.begin(), v.end(), [&](auto& a, auto& b) {
                     return label_key(G, a.first) < label_key(G, b.first);
                 })->first;
        Q c = v[p];
        for (auto& [q, x] : v) x /= c;
        basis[p] = v;
        chosen.push_back(p);
    }
    return chosen;
}

struct ParamRef { char kind; int s; int i; int w; };

inline std::vector<std::uint32_t> default_normalizations(const GeneratorSet& G) {
    static const std::vector<ParamRef> g5 = {
        {'c', 12, 0, 1}, {'c', 12, 0, 2}, {'c', 12, 0, 7}, {'c', 13, 0, 1}, {'c', 13, 0, 2},
        {'c', 13, 0, 3}, {'c', 13, 0, 8}, {'d', 16, 0, 1}, {'d', 16, 0, 6}, {'d', 21, 0, 5}};
    static const std::vector<ParamRef> g6 = {
        {'c', 14, 0, 1}, {'c', 15, 0, 1}, {'c', 16, 1, 1}, {'d', 18, 0, 1}, {'d', 18, 0, 2},
        {'c', 15, 0, 2}, {'c', 16, 1, 2}, {'c', 15, 0, 3}, {'c', 16, 1, 3}, {'c', 16, 1, 4},
        {'c', 15, 0, 6}, {'c', 14, 0, 7}, {'c', 14, 0, 8}, {'c', 15, 0, 9}, {'c', 16, 1, 10}};
    const int g = G.ctx().g();
    const auto* list = g == 5 ? &g5 : g == 6 ? &g6 : nullptr;
    if (!list) return greedy_normalizations(G);
    std::vector<std::uint32_t> out;
    for (auto& r : *list) out.push_back(G.param(r.kind, r.s, r.i, r.w));
    return out;
}

struct DeformedSet {
    const GeneratorSet* G = nullptr;
    std::set<std::uint32_t> normalized;
    std::vector<std::uint32_t> active;  // remaining parameters, id order
    std::vector<XForm> forms;           // F = F0 - sum c*Z_n
};

inline DeformedSet pre_deform(const GeneratorSet& G, const std::vector<std::uint32_t>& normalized) {
    DeformedSet D;
    D.G = &G;
    for (auto id : normalized) {
        if (id >= G.params().names.size()) throw input_error("deformation", "UnknownParameter", "id " + std::to_string(id));
        if (!D.normalized.insert(id).second)
            throw input_error("deformation", "DuplicateNormalization", G.params().render(id) + " listed twice");
    }
    for (std::size_t k = 0; k < G.size(); ++k) {
        XForm f = G.initial()[k];
        for (auto id : G.gen(k).params) {
            if (D.normalized.count(id)) continue;
            f.add_term(G.param_monomial(id), ParamPoly::var(id, -1));
            D.active.push_back(id);
        }
        int w = -1;
        if (!is_isobaric(f, G.params(), &w) || w != G.gen(k).s)
            throw Error("deformation", "NotIsobaric", G.gen(k).name() + " is not isobaric of weight " + std::to_string(G.gen(k).s));
        D.forms.push_back(std::move(f));
    }
    std::sort(D.active.begin(), D.active.end());
    return D;
}

struct ResidueEntry {
    std::size_t syzygy = 0;  // index into the relation list
    std::size_t target = 0;  // generator index
    int m = 0;               // exponent of t
    int weight = 0;          // relation weight - m
    ParamPoly eq;
};

struct ResidueSystem {
    std::vector<ResidueEntry> entries;
    std::size_t parameters = 0;
};

// Lift of one relation to the deformed forms, reduced onto Lambda.
inline ReductionCertificate lift_and_reduce(const DeformedSet& D, const SyzygyRelation& R, bool verify = false) {
    DivideOptions opt;
    opt.weight_bound = R.weight;
    opt.verify = verify;
    return divide(R.expand(D.forms), *D.G, D.forms, opt);
}

inline ResidueSystem residue_system(const DeformedSet& D, const std::vector<SyzygyRelation>& rels) {
    ResidueSystem out;
    out.parameters = D.active.size();
    const ParamTable& P = D.G->params();
    for (std::size_t k = 0; k < rels.size(); ++k) {
        const auto& R = rels[k];
        auto cert = lift_and_reduce(D, R);
        for (auto& [m, eq] : substitute_t(cert.remainder)) {
            const int w = R.weight - m;
            if (P.isobaric_weight(eq) != w)
                throw Error("deformation", "NotIsobaric", "equation at t^" + std::to_string(m) + " of " + D.G->gen(R.target).name());
            out.entries.push_back({k, R.target, m, w, eq});
        }
    }
    std::stable_sort(out.entries.begin(), out.entries.end(), [](auto& a, auto& b) {
        return std::tie(a.target, a.m) < std::tie(b.target, b.m);
    });
    return out;
}

}  // namespace gmod
