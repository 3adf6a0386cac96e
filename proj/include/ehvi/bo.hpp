#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ehvi/ehvi.hpp"
#include "ehvi/problems.hpp"

namespace ehvi {

struct BoRunRecord {
    std::size_t iteration = 0;   // 0-based evaluation index
    std::size_t candidate = 0;   // index into the candidate set
    std::vector<double> design;
    ObjectiveVector objectives;
    double hypervolume = 0.0;    // of all observations so far
    double acquisition_time_ms = 0.0;  // 0 for initial and random evaluations
};

// Index of the largest value; ties go to the lowest index.
std::size_t select_argmax(std::span<const double> values);

// Observations of one run on a fixed problem, plus the EHVI-driven step.
class BoState {
public:
    BoState(const ProblemInstance& problem, Algorithm backend = Algorithm::automatic);

    // Queries a candidate without using the surrogate (initial design).
    const BoRunRecord& observe(std::size_t candidate);

    // Fits one GP per objective, scores every unexplored candidate by EHVI
    // and queries the best one. Throws ExhaustedError when nothing is left
    // and ParameterError before any observation.
    const BoRunRecord& step();

    // EHVI of every unexplored candidate under the current surrogates, in
    // ascending candidate order; `indices` receives the candidate ids.
    std::vector<double> acquisition(std::vector<std::size_t>& indices) const;

    const std::vector<BoRunRecord>& history() const { return history_; }
    double hypervolume() const { return history_.empty() ? 0.0 : history_.back().hypervolume; }
    bool explored(std::size_t candidate) const { return explored_.at(candidate); }
    std::size_t unexplored() const;

private:
    const ProblemInstance* problem_;
    Algorithm backend_;
    std::vector<bool> explored_;
    std::vector<std::size_t> observed_;
    std::vector<ObjectiveVector> front_;  // nondominated observations
    std::vector<BoRunRecord> history_;
};

// Shuffled candidate order for a seed; the BO and random arms both start from
// its prefix, so runs sharing a seed share their initial design.
std::vector<std::size_t> candidate_permutation(std::size_t candidates, std::uint64_t seed);

struct BoConfig {
    std::size_t initial = 20;
    std::size_t iterations = 100;
    std::uint64_t seed = 0;
    Algorithm backend = Algorithm::automatic;
};

std::vector<BoRunRecord> run_bo(const ProblemInstance& problem, const BoConfig& config);

// `evaluations` candidates taken in permutation order.
std::vector<BoRunRecord> run_random(const ProblemInstance& problem, std::size_t evaluations, std::uint64_t seed);

}  // namespace ehvi
