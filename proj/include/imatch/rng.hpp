#pragma once

#include <cstdint>
#include <random>

namespace imatch {

// Deterministic random stream for one run. mt19937_64 is bit-exact across
// platforms by the standard; uniform doubles are produced by hand because the
// standard library distributions are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform draw in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 gen_;
};

// Derives a seed for an independent named stream from a base seed, so that
// instance generation and run sampling never share draws.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream);

inline constexpr std::uint64_t kInstanceStream = 0x1;
inline constexpr std::uint64_t kRunStream = 0x2;

}  // namespace imatch
