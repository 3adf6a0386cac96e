#include "ehvi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ehvi/grid.hpp"
#include "ehvi/random.hpp"

namespace ehvi {

namespace {

constexpr std::size_t kChunks = 64;

struct Moments {
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;  // sum of squared deviations

    void add(double x) {
        ++count;
        const double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }

    // Chan et al. pairwise combination.
    void merge(const Moments& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double n = static_cast<double>(count + o.count);
        const double d = o.mean - mean;
        mean += d * static_cast<double>(o.count) / n;
        m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) / n;
        count += o.count;
    }
};

Moments sample_chunk(const Front& front, const GaussianBelief& belief, std::size_t samples, std::uint64_t seed,
                     std::uint64_t chunk) {
    Rng rng(seed, chunk);
    const std::size_t m = belief.objectives();
    ObjectiveVector y(m);
    Moments acc;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < m; ++j) y[j] = rng.normal(belief.mean()[j], belief.stddev()[j]);
        acc.add(hypervolume_improvement(y, front));
    }
    return acc;
}

}  // namespace

McEstimate ehvi_monte_carlo(const Front& front, const GaussianBelief& belief, std::size_t samples,
                            std::uint64_t seed, unsigned threads) {
    if (samples < 2) throw ParameterError("Monte-Carlo estimate needs at least 2 samples");
    if (belief.objectives() != front.objectives()) {
        throw DimensionError("belief and front differ in number of objectives");
    }
    const std::size_t chunks = std::min(kChunks, samples);
    std::vector<std::size_t> sizes(chunks, samples / chunks);
    for (std::size_t c = 0; c < samples % chunks; ++c) ++sizes[c];

    std::vector<Moments> parts(chunks);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
    if (threads <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) parts[c] = sample_chunk(front, belief, sizes[c], seed, c);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t c = t; c < chunks; c += threads) {
                    parts[c] = sample_chunk(front, belief, sizes[c], seed, c);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    Moments total;
    for (const auto& p : parts) total.merge(p);
    const double variance = total.m2 / static_cast<double>(total.count - 1);
    return {total.mean, std::sqrt(variance / static_cast<double>(total.count)), samples, seed};
}

double ehvi_quadrature_2d(const Front& front, const GaussianBelief& belief, double tolerance) {
    if (front.objectives() != 2) {
        throw UnsupportedDimensionError("2-D quadrature oracle needs exactly 2 objectives, got " +
                                        std::to_string(front.objectives()));
    }
    if (!(tolerance > 0.0)) throw ParameterError("quadrature tolerance must be positive");
    if (belief.objectives() != 2) throw DimensionError("belief and front differ in number of objectives");

    using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    constexpr unsigned kMaxDepth = 30;
    const auto& mu = belief.mean();
    const auto& sigma = belief.stddev();
    auto phi1 = [&](double x) { return std_normal_cdf((x - mu[0]) / sigma[0]); };
    auto phi2 = [&](double y) { return std_normal_cdf((y - mu[1]) / sigma[1]); };

    double total = 0.0;
    for (const auto& box : grid_decompose(front).boxes) {
        const double inner = Rule::integrate(phi2, box.lower[1], box.upper[1], kMaxDepth, tolerance);
        total += Rule::integrate([&](double x) { return phi1(x) * inner; }, box.lower[0], box.upper[0], kMaxDepth,
                                 tolerance);
    }
    return total;
}

}  // namespace ehvi
