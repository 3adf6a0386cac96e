#include "ehvi/bo.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "ehvi/gp.hpp"
#include "ehvi/random.hpp"

namespace ehvi {

namespace {

// Lower bound on posterior stddev handed to EHVI, relative to the GP signal
// stddev; an exactly interpolated point has zero variance.
constexpr double kRelativeStddevFloor = 1e-9;

}  // namespace

std::size_t select_argmax(std::span<const double> values) {
    if (values.empty()) throw ExhaustedError("argmax of an empty acquisition vector");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    return best;
}

BoState::BoState(const ProblemInstance& problem, Algorithm backend)
    : problem_(&problem), backend_(backend), explored_(problem.candidates.size(), false) {
    resolve_algorithm(backend, problem.reference.size());
}

std::size_t BoState::unexplored() const {
    return static_cast<std::size_t>(std::count(explored_.begin(), explored_.end(), false));
}

const BoRunRecord& BoState::observe(std::size_t candidate) {
    if (candidate >= explored_.size()) throw ParameterError("candidate index out of range");
    if (explored_[candidate]) throw ParameterError("candidate " + std::to_string(candidate) + " already queried");
    explored_[candidate] = true;
    observed_.push_back(candidate);

    const ObjectiveVector& y = problem_->candidates.objective_values[candidate];
    front_.push_back(y);
    front_ = nondominated_filter(std::move(front_));

    BoRunRecord rec;
    rec.iteration = history_.size();
    rec.candidate = candidate;
    rec.design = problem_->candidates.design_points[candidate];
    rec.objectives = y;
    rec.hypervolume = ehvi::hypervolume(front_, problem_->reference);
    history_.push_back(std::move(rec));
    return history_.back();
}

std::vector<double> BoState::acquisition(std::vector<std::size_t>& indices) const {
    if (observed_.empty()) throw ParameterError("BO step needs at least one observation");
    const auto& cands = problem_->candidates;
    const std::size_t m = problem_->reference.size();
    const auto d = static_cast<Eigen::Index>(cands.input_dimension());
    const auto n = static_cast<Eigen::Index>(observed_.size());

    indices.clear();
    for (std::size_t i = 0; i < explored_.size(); ++i) {
        if (!explored_[i]) indices.push_back(i);
    }
    const auto q = static_cast<Eigen::Index>(indices.size());

    Eigen::MatrixXd inputs(n, d);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < d; ++k) inputs(i, k) = cands.design_points[observed_[i]][k];
    }
    Eigen::MatrixXd queries(q, d);
    for (Eigen::Index i = 0; i < q; ++i) {
        for (Eigen::Index k = 0; k < d; ++k) queries(i, k) = cands.design_points[indices[i]][k];
    }

    std::vector<Eigen::VectorXd> means(m), stddevs(m);
    for (std::size_t j = 0; j < m; ++j) {
        Eigen::VectorXd targets(n);
        for (Eigen::Index i = 0; i < n; ++i) targets[i] = cands.objective_values[observed_[i]][j];
        const GpSurrogate gp(inputs, targets, heuristic_hyperparameters(inputs, targets));
        gp.predict(queries, means[j], stddevs[j]);
        const double floor = kRelativeStddevFloor * std::sqrt(gp.hyperparameters().signal_variance);
        stddevs[j] = stddevs[j].cwiseMax(floor);
    }

    const Front front = validate_front(ProblemFrame(problem_->reference), front_);
    std::vector<double> scores(indices.size());
    ObjectiveVector mu(m), sigma(m);
    for (std::size_t c = 0; c < indices.size(); ++c) {
        for (std::size_t j = 0; j < m; ++j) {
            mu[j] = means[j][static_cast<Eigen::Index>(c)];
            sigma[j] = stddevs[j][static_cast<Eigen::Index>(c)];
        }
        scores[c] = compute_ehvi(front, GaussianBelief(mu, sigma), backend_).value;
    }
    return scores;
}

const BoRunRecord& BoState::step() {
    if (unexplored() == 0) throw ExhaustedError("every candidate has been queried");
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::size_t> indices;
    const std::vector<double> scores = acquisition(indices);
    const std::size_t pick = indices[select_argmax(scores)];
    const auto stop = std::chrono::steady_clock::now();
    observe(pick);
    history_.back().acquisition_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return history_.back();
}

std::vector<std::size_t> candidate_permutation(std::size_t candidates, std::uint64_t seed) {
    std::vector<std::size_t> order(candidates);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = candidates; i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    return order;
}

std::vector<BoRunRecord> run_bo(const ProblemInstance& problem, const BoConfig& config) {
    BoState state(problem, config.backend);
    const auto order = candidate_permutation(problem.candidates.size(), config.seed);
    const std::size_t initial = std::min(config.initial, order.size());
    for (std::size_t i = 0; i < initial; ++i) state.observe(order[i]);
    for (std::size_t it = 0; it < config.iterations && state.unexplored() > 0; ++it) state.step();
    return state.history();
}

std::vector<BoRunRecord> run_random(const ProblemInstance& problem, std::size_t evaluations, std::uint64_t seed) {
    BoState state(problem);
    const auto order = candidate_permutation(problem.candidates.size(), seed);
    for (std::size_t i = 0; i < std::min(evaluations, order.size()); ++i) state.observe(order[i]);
    return state.history();
}

}  // namespace ehvi
