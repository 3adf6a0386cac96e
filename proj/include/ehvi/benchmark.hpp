#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ehvi/ehvi.hpp"

namespace ehvi {

// Random mutually nondominated set in the maximization convention: uniform
// draws from [0.1, 10]^m, each kept iff it neither weakly dominates nor is
// weakly dominated by an accepted point, until n are accepted. The frame is
// maximize with the origin as reference.
struct GeneratedFront {
    ProblemFrame frame;
    std::vector<ObjectiveVector> points;
    std::uint64_t seed = 0;
};

GeneratedFront generate_front(std::size_t m, std::size_t n, std::uint64_t seed);

struct BenchmarkRecord {
    Algorithm algorithm = Algorithm::wfg;
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t repetition = 0;
    double ehvi = 0.0;
    std::int64_t time_ns = 0;
    std::size_t work = 0;
};

struct BenchConfig {
    std::vector<std::size_t> objectives{3};
    std::vector<std::size_t> sizes{10, 50, 100, 150, 200, 250, 300};
    std::size_t seeds = 10;          // front seeds 0 .. seeds - 1
    std::size_t repetitions = 5;
    std::vector<Algorithm> algorithms{Algorithm::grid, Algorithm::wfg, Algorithm::clm3};
    double mean = 10.0;              // maximization convention, every objective
    double spread = 2.5;
    bool spread_is_variance = false; // otherwise `spread` is the standard deviation
};

// Belief used for every benchmark front, in the user (maximize) convention.
GaussianBelief benchmark_belief(const BenchConfig& config, std::size_t m);

// One record per (m, n, seed, algorithm, repetition), in that sort order;
// clm3 is skipped for m != 3. Each timed call follows one untimed warm-up call.
// `progress` (optional) is called after every finished front.
std::vector<BenchmarkRecord> run_benchmark(const BenchConfig& config,
                                           const std::function<void(std::size_t m, std::size_t n, std::uint64_t seed)>& progress = {});

struct BenchSummary {
    Algorithm algorithm = Algorithm::wfg;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t records = 0;
    double mean_time_ns = 0.0;
    double stddev_time_ns = 0.0;
    double mean_work = 0.0;
    std::size_t max_work = 0;
};

// Per (algorithm, m, n) statistics, sorted by m, n, algorithm.
std::vector<BenchSummary> summarize(const std::vector<BenchmarkRecord>& records);

// Largest relative EHVI disagreement between algorithms on the same
// (m, n, seed) front.
double max_relative_disagreement(const std::vector<BenchmarkRecord>& records);

}  // namespace ehvi
