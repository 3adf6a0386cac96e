// ehvi: exact EHVI computation, benchmark generation, Monte-Carlo checks and
// a Bayesian-optimization demo driver.
//
// Exit codes: 0 ok, 2 usage/parse error, 3 invalid front, 4 unsupported
// dimension, 1 anything else.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehvi/benchmark.hpp"
#include "ehvi/bo.hpp"
#include "ehvi/io.hpp"
#include "ehvi/oracle.hpp"
#include "ehvi/problems.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kInvalidFront = 3, kUnsupported = 4 };

int cmd_compute(const std::string& input, const std::string& algorithm_flag) {
    const ehvi::ComputeRequest req = ehvi::read_request_file(input);
    ehvi::Algorithm algo = req.algorithm;
    if (!algorithm_flag.empty()) algo = ehvi::parse_algorithm(algorithm_flag);
    const ehvi::Front front = req.validated_front();
    const ehvi::GaussianBelief belief = req.internal_belief();
    const ehvi::Algorithm resolved = ehvi::resolve_algorithm(algo, front.objectives());

    const auto t0 = std::chrono::steady_clock::now();
    const ehvi::EhviResult res = ehvi::compute_ehvi(front, belief, resolved);
    const auto t1 = std::chrono::steady_clock::now();

    json out;
    out["ehvi"] = res.value;
    out["algorithm"] = ehvi::to_string(resolved);
    out["boxes"] = res.work;
    out["time_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    std::cout << out.dump() << '\n';
    return kOk;
}

int cmd_gen_front(std::size_t m, std::size_t n, std::uint64_t seed, const std::string& out_path) {
    const ehvi::GeneratedFront gen = ehvi::generate_front(m, n, seed);
    const std::string text = ehvi::front_to_json(gen).dump(1);
    if (out_path.empty() || out_path == "-") {
        std::cout << text << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw ehvi::ParseError("cannot write '" + out_path + "'");
        out << text << '\n';
    }
    return kOk;
}

int cmd_bench(const ehvi::BenchConfig& config, const std::string& out_path, const std::string& summary_path) {
    const auto records = ehvi::run_benchmark(config, [](std::size_t m, std::size_t n, std::uint64_t seed) {
        std::cerr << "bench m=" << m << " n=" << n << " seed=" << seed << '\n';
    });
    if (out_path.empty() || out_path == "-") {
        ehvi::write_benchmark_csv(std::cout, records);
    } else {
        std::ofstream out(out_path);
        if (!out) throw ehvi::ParseError("cannot write '" + out_path + "'");
        ehvi::write_benchmark_csv(out, records);
    }
    const auto summary = ehvi::summarize(records);
    if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        if (!out) throw ehvi::ParseError("cannot write '" + summary_path + "'");
        ehvi::write_summary_csv(out, summary);
    } else if (!(out_path.empty() || out_path == "-")) {
        ehvi::write_summary_csv(std::cout, summary);
    }
    std::cerr << "max relative disagreement across algorithms: "
              << ehvi::format_number(ehvi::max_relative_disagreement(records)) << '\n';
    return kOk;
}

int cmd_oracle(const std::string& input, std::size_t samples, std::uint64_t seed, unsigned threads) {
    const ehvi::ComputeRequest req = ehvi::read_request_file(input);
    const ehvi::Front front = req.validated_front();
    const ehvi::McEstimate est = ehvi::ehvi_monte_carlo(front, req.internal_belief(), samples, seed, threads);
    json out;
    out["mean"] = est.mean;
    out["std_error"] = est.std_error;
    out["samples"] = est.samples;
    out["seed"] = est.seed;
    std::cout << out.dump() << '\n';
    return kOk;
}

struct Trajectories {
    std::vector<std::vector<double>> runs;  // hypervolume per evaluation
};

void write_trajectory_summary(std::ostream& os, const Trajectories& bo, const Trajectories& rnd) {
    auto stats = [](const Trajectories& t, std::size_t i) {
        double sum = 0.0, sq = 0.0;
        std::size_t k = 0;
        for (const auto& run : t.runs) {
            if (i < run.size()) {
                sum += run[i];
                ++k;
            }
        }
        const double mean = k ? sum / static_cast<double>(k) : 0.0;
        for (const auto& run : t.runs) {
            if (i < run.size()) sq += (run[i] - mean) * (run[i] - mean);
        }
        return std::pair{mean, k > 1 ? std::sqrt(sq / static_cast<double>(k - 1)) : 0.0};
    };
    std::size_t length = 0;
    for (const auto& run : bo.runs) length = std::max(length, run.size());
    for (const auto& run : rnd.runs) length = std::max(length, run.size());
    os << "evaluation,bo_mean,bo_stddev,random_mean,random_stddev\n";
    for (std::size_t i = 0; i < length; ++i) {
        const auto [bm, bs] = stats(bo, i);
        const auto [rm, rs] = stats(rnd, i);
        os << i + 1 << ',' << ehvi::format_number(bm) << ',' << ehvi::format_number(bs) << ','
           << ehvi::format_number(rm) << ',' << ehvi::format_number(rs) << '\n';
    }
}

int cmd_bo_demo(const std::string& problem_name, std::size_t seeds, std::size_t iterations, std::size_t initial,
                std::size_t resolution, const std::string& out_dir, const std::string& backend) {
    const ehvi::ProblemInstance problem = ehvi::synthetic_problem(problem_name, resolution);
    const ehvi::Algorithm algo = ehvi::parse_algorithm(backend);
    fs::create_directories(out_dir);

    Trajectories bo, rnd;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        const auto bo_run = ehvi::run_bo(problem, {initial, iterations, seed, algo});
        const auto rnd_run = ehvi::run_random(problem, initial + iterations, seed);
        for (const auto& [arm, run] : {std::pair{"bo", &bo_run}, std::pair{"random", &rnd_run}}) {
            std::ofstream out(fs::path(out_dir) / (problem_name + "_" + arm + "_seed" + std::to_string(seed) + ".csv"));
            ehvi::write_bo_csv(out, seed, arm, *run);
        }
        auto hv = [](const std::vector<ehvi::BoRunRecord>& run) {
            std::vector<double> out;
            for (const auto& r : run) out.push_back(r.hypervolume);
            return out;
        };
        bo.runs.push_back(hv(bo_run));
        rnd.runs.push_back(hv(rnd_run));
        std::cerr << "seed " << seed << ": bo " << ehvi::format_number(bo.runs.back().back()) << ", random "
                  << ehvi::format_number(rnd.runs.back().back()) << '\n';
    }
    std::ofstream summary(fs::path(out_dir) / (problem_name + "_summary.csv"));
    write_trajectory_summary(summary, bo, rnd);
    write_trajectory_summary(std::cout, bo, rnd);
    std::cerr << "reference hypervolume " << ehvi::format_number(problem.reference_hypervolume) << '\n';
    return kOk;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ehvi::InvalidFrontError& e) {
        std::cerr << "invalid front: " << e.what() << '\n';
        return kInvalidFront;
    } catch (const ehvi::ReferenceBoundError& e) {
        std::cerr << "invalid front: " << e.what() << '\n';
        return kInvalidFront;
    } catch (const ehvi::UnsupportedDimensionError& e) {
        std::cerr << "unsupported dimension: " << e.what() << '\n';
        return kUnsupported;
    } catch (const ehvi::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ehvi::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ehvi::DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact expected hypervolume improvement"};
    app.require_subcommand(1);

    std::string input, algorithm;
    auto* compute = app.add_subcommand("compute", "Compute EHVI for a request file");
    compute->add_option("--input", input, "Request JSON")->required();
    compute->add_option("--algorithm", algorithm, "grid|wfg|clm3|auto (overrides the request)");

    std::size_t gen_m = 3, gen_n = 10;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen-front", "Generate a random nondominated front (maximization)");
    gen->add_option("--m", gen_m, "Objectives")->required();
    gen->add_option("--n", gen_n, "Points")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Seed");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    ehvi::BenchConfig bench_cfg;
    std::vector<std::string> bench_algos{"grid", "wfg", "clm3"};
    std::string bench_out, bench_summary;
    auto* bench = app.add_subcommand("bench", "Time every backend on generated fronts");
    bench->add_option("--m", bench_cfg.objectives, "Objective counts")->delimiter(',');
    bench->add_option("--n", bench_cfg.sizes, "Front sizes")->delimiter(',');
    bench->add_option("--seeds", bench_cfg.seeds, "Fronts per (m, n)");
    bench->add_option("--reps", bench_cfg.repetitions, "Timed repetitions per front");
    bench->add_option("--algorithms", bench_algos, "Backends")->delimiter(',');
    bench->add_option("--mean", bench_cfg.mean, "Belief mean (maximization)");
    bench->add_option("--stddev", bench_cfg.spread, "Belief spread");
    bench->add_flag("--variance", bench_cfg.spread_is_variance, "Treat --stddev as a variance");
    bench->add_option("--out", bench_out, "Record CSV (default stdout)");
    bench->add_option("--summary", bench_summary, "Per-cell summary CSV");

    std::size_t samples = 1000000;
    std::uint64_t oracle_seed = 0;
    unsigned threads = 0;
    auto* oracle = app.add_subcommand("oracle", "Monte-Carlo EHVI estimate for a request file");
    oracle->add_option("--input", input, "Request JSON")->required();
    oracle->add_option("--samples", samples, "Samples");
    oracle->add_option("--seed", oracle_seed, "Seed");
    oracle->add_option("--threads", threads, "Worker threads (0 = all cores)");

    std::string problem = "three_anchor", out_dir = "runs", backend = "auto";
    std::size_t bo_seeds = 10, iters = 100, init = 20, resolution = 32;
    auto* demo = app.add_subcommand("bo-demo", "Run EHVI Bayesian optimization against random sampling");
    demo->add_option("--problem", problem, "Synthetic problem");
    demo->add_option("--seeds", bo_seeds, "Runs per arm");
    demo->add_option("--iters", iters, "BO iterations after the initial design");
    demo->add_option("--init", init, "Initial random evaluations");
    demo->add_option("--resolution", resolution, "Grid points per design axis");
    demo->add_option("--algorithm", backend, "EHVI backend");
    demo->add_option("--out-dir", out_dir, "Directory for CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (*compute) return guarded([&] { return cmd_compute(input, algorithm); });
    if (*gen) return guarded([&] { return cmd_gen_front(gen_m, gen_n, gen_seed, gen_out); });
    if (*bench) {
        return guarded([&] {
            bench_cfg.algorithms.clear();
            for (const auto& a : bench_algos) bench_cfg.algorithms.push_back(ehvi::parse_algorithm(a));
            return cmd_bench(bench_cfg, bench_out, bench_summary);
        });
    }
    if (*oracle) return guarded([&] { return cmd_oracle(input, samples, oracle_seed, threads); });
    if (*demo) return guarded([&] { return cmd_bo_demo(problem, bo_seeds, iters, init, resolution, out_dir, backend); });
    return kUsage;
}
