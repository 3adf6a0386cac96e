#include "ehvi/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <tuple>

#include "ehvi/random.hpp"

namespace ehvi {

GeneratedFront generate_front(std::size_t m, std::size_t n, std::uint64_t seed) {
    if (m < 2) throw DimensionError("generated fronts need at least 2 objectives");
    if (n < 1) throw ParameterError("generated fronts need at least 1 point");
    Rng rng(seed);
    std::vector<ObjectiveVector> accepted;
    accepted.reserve(n);
    ObjectiveVector draw(m);
    while (accepted.size() < n) {
        for (double& x : draw) x = rng.uniform(0.1, 10.0);
        // Comparable pairs are excluded in either direction, so negating for
        // the internal convention does not change the test.
        const bool comparable = std::any_of(accepted.begin(), accepted.end(), [&](const ObjectiveVector& a) {
            return covers(a, draw) || covers(draw, a);
        });
        if (!comparable) accepted.push_back(draw);
    }
    return {ProblemFrame(ObjectiveVector(m, 0.0), Orientation::maximize), std::move(accepted), seed};
}

GaussianBelief benchmark_belief(const BenchConfig& config, std::size_t m) {
    const double stddev = config.spread_is_variance ? std::sqrt(config.spread) : config.spread;
    return GaussianBelief(ObjectiveVector(m, config.mean), ObjectiveVector(m, stddev));
}

std::vector<BenchmarkRecord> run_benchmark(const BenchConfig& config,
                                           const std::function<void(std::size_t, std::size_t, std::uint64_t)>& progress) {
    using Clock = std::chrono::steady_clock;
    if (config.repetitions == 0 || config.seeds == 0) throw ParameterError("benchmark needs seeds and repetitions");
    std::vector<Algorithm> algorithms = config.algorithms;
    std::sort(algorithms.begin(), algorithms.end());
    algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());

    std::vector<BenchmarkRecord> records;
    for (std::size_t m : config.objectives) {
        for (std::size_t n : config.sizes) {
            for (std::uint64_t seed = 0; seed < config.seeds; ++seed) {
                const GeneratedFront gen = generate_front(m, n, seed);
                const Front front = validate_front(gen.frame, gen.points);
                const GaussianBelief belief = to_internal(gen.frame, benchmark_belief(config, m));
                for (Algorithm algo : algorithms) {
                    if (algo == Algorithm::automatic) algo = resolve_algorithm(algo, m);
                    if (algo == Algorithm::clm3 && m != 3) continue;
                    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
                        (void)compute_ehvi(front, belief, algo);
                        const auto t0 = Clock::now();
                        const EhviResult res = compute_ehvi(front, belief, algo);
                        const auto t1 = Clock::now();
                        records.push_back({algo, m, n, seed, rep, res.value,
                                           std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
                                           res.work});
                    }
                }
                if (progress) progress(m, n, seed);
            }
        }
    }
    return records;
}

std::vector<BenchSummary> summarize(const std::vector<BenchmarkRecord>& records) {
    struct Acc {
        std::vector<double> times;
        double work = 0.0;
        std::size_t max_work = 0;
    };
    std::map<std::tuple<std::size_t, std::size_t, Algorithm>, Acc> cells;
    for (const auto& r : records) {
        auto& acc = cells[{r.m, r.n, r.algorithm}];
        acc.times.push_back(static_cast<double>(r.time_ns));
        acc.work += static_cast<double>(r.work);
        acc.max_work = std::max(acc.max_work, r.work);
    }
    std::vector<BenchSummary> out;
    for (const auto& [key, acc] : cells) {
        BenchSummary s;
        std::tie(s.m, s.n, s.algorithm) = key;
        s.records = acc.times.size();
        const double count = static_cast<double>(s.records);
        double sum = 0.0;
        for (double t : acc.times) sum += t;
        s.mean_time_ns = sum / count;
        double sq = 0.0;
        for (double t : acc.times) sq += (t - s.mean_time_ns) * (t - s.mean_time_ns);
        s.stddev_time_ns = s.records > 1 ? std::sqrt(sq / (count - 1.0)) : 0.0;
        s.mean_work = acc.work / count;
        s.max_work = acc.max_work;
        out.push_back(s);
    }
    return out;
}

double max_relative_disagreement(const std::vector<BenchmarkRecord>& records) {
    std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::pair<double, double>> ranges;
    for (const auto& r : records) {
        auto [it, fresh] = ranges.try_emplace({r.m, r.n, r.seed}, r.ehvi, r.ehvi);
        if (!fresh) {
            it->second.first = std::min(it->second.first, r.ehvi);
            it->second.second = std::max(it->second.second, r.ehvi);
        }
    }
    double worst = 0.0;
    for (const auto& [key, range] : ranges) {
        const double scale = std::max(std::abs(range.first), std::abs(range.second));
        if (scale > 0.0) worst = std::max(worst, (range.second - range.first) / scale);
    }
    return worst;
}

}  // namespace ehvi
