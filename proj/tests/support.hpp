#pragma once
// Shared helpers for the test binaries: cached pipeline runs and a small
// reader for the reference polynomials under tests/data.

#include "gmod/gmod.hpp"

#include <cctype>
#include <fstream>
#include <memory>

namespace gmt {

using namespace gmod;

inline std::vector<int> odd_generators(int g) {
    std::vector<int> out;
    for (int k = g; k <= 2 * g - 2; ++k) out.push_back(k);
    return out;
}

// Full pipeline without sampling, cached per genus.
inline const Analysis& analysis(int g) {
    static std::map<int, std::unique_ptr<Analysis>> cache;
    auto& slot = cache[g];
    if (!slot) {
        Options opt;
        opt.generators = odd_generators(g);
        opt.samples = 0;
        slot = std::make_unique<Analysis>(analyze(opt));
    }
    return *slot;
}

inline std::vector<std::string> names(const GeneratorSet& G, const std::vector<std::uint32_t>& ids) {
    std::vector<std::string> out;
    for (auto id : ids) out.push_back(G.params().render(id));
    return out;
}

// ---- reference polynomials -------------------------------------------------

// Parses "2*a_5*b_8^2 - c_{12,4} + 1". Names resolve through `lookup`.
class PolyReader {
public:
    PolyReader(std::string text, std::function<std::uint32_t(const std::string&)> lookup)
        : s_(std::move(text)), lookup_(std::move(lookup)) {}

    ParamPoly parse() {
        ParamPoly out;
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            Q sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                if (s_[pos_] == '-') sign = -1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            out += term() * ParamPoly::constant(sign);
            first = false;
            skip();
        }
        return out;
    }

private:
    ParamPoly term() {
        ParamPoly t = ParamPoly::constant(1);
        for (;;) {
            skip();
            t = t * factor();
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') { ++pos_; continue; }
            return t;
        }
    }
    ParamPoly factor() {
        ParamPoly base;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            base = ParamPoly::constant(Q(s_.substr(b, pos_ - b)));
        } else {
            std::size_t b = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '{') {
                auto close = s_.find('}', pos_);
                if (close == std::string::npos) fail("unclosed brace");
                pos_ = close + 1;
            }
            if (b == pos_) fail("expected a factor");
            base = ParamPoly::var(lookup_(s_.substr(b, pos_ - b)));
        }
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (b == pos_) fail("expected an exponent");
            base = pow(base, static_cast<unsigned>(std::stoi(s_.substr(b, pos_ - b))));
        }
        return base;
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::runtime_error("reference data: " + why + " at " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::function<std::uint32_t(const std::string&)> lookup_;
};

struct RefEntry {
    std::string section, lhs, rhs;
};

inline std::vector<RefEntry> read_reference(const std::string& file) {
    std::ifstream in(std::string(GMOD_TEST_DATA) + "/" + file);
    if (!in) throw std::runtime_error("missing reference file " + file);
    std::vector<RefEntry> out;
    std::string line, section;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '[') {
            section = line.substr(1, line.find(']') - 1);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string x) {
            auto b = x.find_first_not_of(" \t"), e = x.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
        };
        out.push_back({section, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }
    return out;
}

// Short genus-6 names a_j, b_i onto the coefficients they abbreviate.
inline std::uint32_t genus6_short_name(const GeneratorSet& G, const std::string& name) {
    if (name.size() > 2 && (name[0] == 'a' || name[0] == 'b') && name[1] == '_') {
        const int k = std::stoi(name.substr(2));
        if (name[0] == 'a') {
            if (k == 2 || k == 4 || k == 5 || k == 6) return G.param('c', 14, 0, k);
            if (k == 7 || k == 8) return G.param('c', 15, 0, k);
            if (k == 9) return G.param('c', 16, 1, 9);
        } else {
            if (k == 8) return G.param('c', 16, 1, 8);
            if ((k >= 3 && k <= 6) || (k >= 10 && k <= 12)) return G.param('d', 18, 0, k);
        }
    }
    return parse_param_name(name, G);
}

// p -> -p on every parameter
inline ParamPoly flip(const ParamPoly& p) {
    ParamPoly out;
    for (auto& [m, c] : p.t) out.add_term(m, pmono_degree(m) % 2 ? Q(-c) : c);
    return out;
}

inline std::size_t term_distance(const ParamPoly& a, const ParamPoly& b) { return (a - b).t.size(); }

// Differing terms between our elimination x = e and a reference x = r,
// allowing the global sign convention p -> -p (which turns x = r into
// x = -r(-p)).
inline std::size_t elimination_distance(const ParamPoly& ours, const ParamPoly& ref) {
    return std::min(term_distance(ours, ref), term_distance(ours, Q(-1) * flip(ref)));
}

// Equations are compared up to sign and the same convention.
inline std::size_t equation_distance(const ParamPoly& ours, const ParamPoly& ref) {
    std::size_t best = SIZE_MAX;
    for (const ParamPoly& r : {ref, flip(ref)})
        best = std::min({best, term_distance(ours, r), term_distance(ours, Q(-1) * r)});
    return best;
}

}  // namespace gmt
