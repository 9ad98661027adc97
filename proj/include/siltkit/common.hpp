#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace silt {

// Mathematical failure reported to the caller (bad input, bound exceeded,
// non-Frobenius algebra, ...). CLI maps these to exit code 1.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal validation (d^2 != 0 after a cone, associativity failure
// of a constructed table, ...). Always a bug, never a user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& what, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + what),
          line(line_), col(col_) {}
};

// Seeded randomness source. Every probabilistic routine takes one of these so
// a fixed --seed reproduces the whole run byte for byte.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : gen_(seed ^ 0x9e3779b97f4a7c15ull) {}

    uint32_t below(uint32_t n) {
        return static_cast<uint32_t>(gen_() % n);
    }
    // Independent stream for a sub-task; keeps sibling tasks order-insensitive.
    Rng fork(uint64_t salt) {
        return Rng(gen_() + 0x51'7cc1b727220a95ull * salt);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace silt
