#pragma once
// Shared basics: exact rationals, error type, deterministic RNG.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace gmod {

using Q = mpq_class;

inline std::string to_string(const Q& q) { return q.get_str(); }

// Errors carry a stable code so the CLI can map them to exit codes.
// Input errors are the caller's fault; everything else is an invariant failure.
class Error : public std::runtime_error {
public:
    Error(std::string module, std::string code, const std::string& what, bool input = false)
        : std::runtime_error(module + ": " + code + ": " + what),
          module_(std::move(module)), code_(std::move(code)), input_(input) {}
    const std::string& module() const { return module_; }
    const std::string& code() const { return code_; }
    bool input_error() const { return input_; }

private:
    std::string module_, code_;
    bool input_;
};

inline Error input_error(const std::string& module, const std::string& code, const std::string& msg) {
    return Error(module, code, msg, true);
}

// mt19937_64 is specified by the standard; the distributions are not, so we
// draw integers ourselves to keep reports byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do { x = gen_(); } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }
    // nonzero rational with |numerator|, denominator in [1, bound]
    Q rational(int bound = 97) {
        Q q(static_cast<long>(uniform(1, bound)), static_cast<unsigned long>(uniform(1, bound)));
        q.canonicalize();
        if (uniform(0, 1)) q = -q;
        return q;
    }
    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace gmod
