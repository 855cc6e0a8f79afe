#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace secnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct DimensionError : Error {
    using Error::Error;
};

struct UnsupportedOperation : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

// Fixed-point equation had zero or multiple solutions for some encoder input.
struct UniquenessError : Error {
    std::uint64_t message_index;
    std::uint64_t scramble_index;
    UniquenessError(std::uint64_t m, std::uint64_t l)
        : Error("uniqueness violation at (m=" + std::to_string(m) +
                ", l=" + std::to_string(l) + ")"),
          message_index(m), scramble_index(l) {}
};

// Deterministic 64-bit generator (splitmix64). Stream splitting keys a fresh
// generator off (seed, index) so partitioned work is order-invariant.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return Rng(mix.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Rng::below(0)");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

private:
    std::uint64_t state_;
};

}  // namespace secnet
