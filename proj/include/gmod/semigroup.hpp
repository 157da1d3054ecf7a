#pragma once
// Numerical semigroups, partitions into nongaps and the counting formulas.

#include "core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace gmod {

struct Semigroup {
    std::vector<int> generators;
    int genus = 0;
    std::vector<int> gaps;
    int frobenius = -1;        // -1 when there are no gaps
    std::vector<int> nongaps;  // first g nongaps n_0 = 0 < n_1 < ...

    bool contains(int n) const {
        if (n < 0) return false;
        if (n > frobenius) return true;
        return !std::binary_search(gaps.begin(), gaps.end(), n);
    }
    int top() const { return 2 * genus - 2; }
};

inline Semigroup from_generators(std::vector<int> gens) {
    if (gens.empty()) throw input_error("semigroup", "EmptyGenerators", "no generators given");
    for (int a : gens)
        if (a <= 0) throw input_error("semigroup", "NonPositiveGenerator", "generators must be positive");
    int d = 0;
    for (int a : gens) d = std::gcd(d, a);
    if (d != 1) throw input_error("semigroup", "NotCoprime", "gcd of generators is " + std::to_string(d));

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const int a0 = gens.front();

    // grow the sieve until a0 consecutive members appear; everything after is in
    std::vector<char> in{1};
    int run = 1, n = 0;
    while (run < a0) {
        ++n;
        char v = 0;
        for (int a : gens)
            if (a <= n && in[n - a]) { v = 1; break; }
        in.push_back(v);
        run = v ? run + 1 : 0;
    }
    Semigroup S;
    S.generators = gens;
    for (int k = 0; k <= n; ++k)
        if (!in[k]) S.gaps.push_back(k);
    S.genus = static_cast<int>(S.gaps.size());
    S.frobenius = S.gaps.empty() ? -1 : S.gaps.back();
    for (int k = 0; static_cast<int>(S.nongaps.size()) < S.genus; ++k)
        if (S.contains(k)) S.nongaps.push_back(k);

    // closure check up to 2*frobenius+1
    for (int x = 0; x <= 2 * S.frobenius + 1; ++x)
        for (int y = x; x + y <= 2 * S.frobenius + 1; ++y)
            if (S.contains(x) && S.contains(y) && !S.contains(x + y))
                throw Error("semigroup", "ClosureViolated", "sieve is not additively closed");
    return S;
}

inline bool is_symmetric(const Semigroup& S) {
    const int g = S.genus;
    const bool by_frobenius = S.frobenius == 2 * g - 1;
    // reflection: l_i + n_{g-i} = 2g-1 for i = 1..g
    bool by_reflection = true;
    for (int i = 1; i <= g; ++i)
        if (S.gaps[i - 1] + S.nongaps[g - i] != 2 * g - 1) by_reflection = false;
    if (g == 0) by_reflection = true;
    if (by_frobenius != by_reflection)
        throw Error("semigroup", "SymmetryMismatch", "the two symmetry characterizations disagree");
    return by_frobenius;
}

inline bool is_odd_type(const Semigroup& S) {
    const int g = S.genus;
    if (g < 1) return false;
    std::vector<int> want;
    for (int k = 1; k <= g - 1; ++k) want.push_back(k);
    if (2 * g - 1 > g - 1) want.push_back(2 * g - 1);
    return S.gaps == want;
}

inline bool is_hyperelliptic(const Semigroup& S) { return S.genus > 0 && S.contains(2); }

// The pipeline past this module only handles odd-type semigroups of genus >= 5.
inline void require_odd(const Semigroup& S, const std::string& module) {
    if (!is_odd_type(S)) throw input_error(module, "NotOddType", "semigroup is not of odd type <g,...,2g-2>");
    if (S.genus < 5) throw input_error(module, "GenusTooSmall", "odd-type semigroups need genus >= 5");
}

struct PairPartition { int s, index, a, b; };
struct TriplePartition { int sigma, index, a, b, c; };

inline std::vector<PairPartition> partitions2(const Semigroup& S, int s) {
    std::vector<PairPartition> out;
    const auto& N = S.nongaps;
    for (std::size_t i = 0; i < N.size(); ++i)
        for (std::size_t j = i; j < N.size(); ++j)
            if (N[i] + N[j] == s) out.push_back({s, 0, N[i], N[j]});
    if (out.empty()) throw input_error("semigroup", "NoPartition", std::to_string(s) + " is not a sum of two nongaps");
    for (std::size_t k = 0; k < out.size(); ++k) out[k].index = static_cast<int>(k);
    return out;
}

// Ordered by a ascending, then b descending. The stricter "b strictly
// decreasing" shape does not hold in general (g=5, sigma=17: 5+5+7, 5+6+6).
inline std::vector<TriplePartition> partitions3(const Semigroup& S, int sigma) {
    std::vector<TriplePartition> out;
    const auto& N = S.nongaps;
    for (std::size_t i = 0; i < N.size(); ++i)
        for (std::size_t j = i; j < N.size(); ++j)
            for (std::size_t k = j; k < N.size(); ++k)
                if (N[i] + N[j] + N[k] == sigma) out.push_back({sigma, 0, N[i], N[j], N[k]});
    if (out.empty()) throw input_error("semigroup", "NoPartition", std::to_string(sigma) + " is not a sum of three nongaps");
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.a != y.a ? x.a < y.a : x.b > y.b;
    });
    for (std::size_t k = 0; k < out.size(); ++k) out[k].index = static_cast<int>(k);
    return out;
}

inline long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// dim I_r = C(r+g-1, r) - (2r-1)(g-1)
inline long dim_Ir(const Semigroup& S, int r) {
    if (r < 2) throw input_error("semigroup", "BadDegree", "dim_Ir needs r >= 2");
    const long g = S.genus;
    return binomial(r + g - 1, r) - (2L * r - 1) * (g - 1);
}

struct CubicCounts { long eta, wp; };

// eta counts the cubic binomials that are multiples of quadrics; wp the rest.
inline CubicCounts cubic_counts(const Semigroup& S) {
    require_odd(S, "semigroup");
    const long g = S.genus;
    long eta = (g - 3) * (g - 2) + (g - 2) * ((g - 2) / 2) + (g - 3) / 2;
    for (long j = 1; j <= g - 4; ++j) eta += (g - 2 - j) / 2;
    const long wp = binomial(g + 2, 3) - (5 * g - 5) - eta;
    return {eta, wp};
}

}  // namespace gmod
