#pragma once

#include <cstdint>
#include <random>

namespace ehvi {

// Seedable generator with a fully specified output sequence: mt19937_64 for
// raw bits, 53-bit mantissa fill for uniforms and the Box-Muller transform for
// normals. std::*_distribution is avoided because its algorithm is left to the
// standard library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent substream `stream` of `seed`.
    Rng(std::uint64_t seed, std::uint64_t stream);

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n), rejection sampled.
    std::uint64_t below(std::uint64_t n);

    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ehvi
