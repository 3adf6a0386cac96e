#pragma once

#include <cstddef>
#include <cstdint>

#include "ehvi/core.hpp"
#include "ehvi/gauss.hpp"

namespace ehvi {

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(samples)
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

// Monte-Carlo EHVI: the mean hypervolume improvement of normal draws from the
// (internal-convention) belief.
//
// Samples are split into fixed chunks, each drawn from its own substream of
// `seed` and reduced with Welford's update; chunk summaries merge in chunk
// order. The result is therefore identical for any `threads` value
// (0 = hardware concurrency). Throws ParameterError when samples < 2.
McEstimate ehvi_monte_carlo(const Front& front, const GaussianBelief& belief, std::size_t samples,
                            std::uint64_t seed, unsigned threads = 0);

// Adaptive Gauss-Kronrod integration of Phi1 * Phi2 over every box of the
// grid decomposition. The integrand factorizes, so each box is the outer rule
// over x applied to Phi1 times the inner rule's integral of Phi2 over y, each
// at the given relative tolerance. Only the region shape is shared with the
// exact backends; psi is never used. Throws UnsupportedDimensionError unless
// m == 2.
double ehvi_quadrature_2d(const Front& front, const GaussianBelief& belief, double tolerance);

}  // namespace ehvi
