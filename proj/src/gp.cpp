#include "ehvi/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ehvi/errors.hpp"

namespace ehvi {

GpHyperparameters heuristic_hyperparameters(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
                                            double relative_jitter) {
    if (inputs.rows() == 0 || inputs.rows() != targets.size()) {
        throw ParameterError("GP data must be non-empty with one target per input");
    }
    GpHyperparameters hyper;
    const Eigen::Index n = inputs.rows();

    std::vector<double> distances;
    distances.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = i + 1; k < n; ++k) distances.push_back((inputs.row(i) - inputs.row(k)).norm());
    }
    double lengthscale = 1.0;
    if (!distances.empty()) {
        auto mid = distances.begin() + static_cast<std::ptrdiff_t>(distances.size() / 2);
        std::nth_element(distances.begin(), mid, distances.end());
        double median = *mid;
        if (distances.size() % 2 == 0) {
            median = 0.5 * (median + *std::max_element(distances.begin(), mid));
        }
        if (median > 0.0) lengthscale = median;
    }
    hyper.lengthscales = Eigen::VectorXd::Constant(inputs.cols(), lengthscale);

    hyper.prior_mean = targets.mean();
    const double variance = n > 1 ? (targets.array() - hyper.prior_mean).square().sum() / static_cast<double>(n - 1) : 0.0;
    hyper.signal_variance = variance > 0.0 ? variance : 1.0;
    hyper.noise_variance = relative_jitter * hyper.signal_variance;
    return hyper;
}

GpSurrogate::GpSurrogate(Eigen::MatrixXd inputs, Eigen::VectorXd targets, GpHyperparameters hyper)
    : inputs_(std::move(inputs)), targets_(std::move(targets)), hyper_(std::move(hyper)) {
    const Eigen::Index n = inputs_.rows();
    if (n == 0 || n != targets_.size()) throw ParameterError("GP data must be non-empty with one target per input");
    if (hyper_.lengthscales.size() != inputs_.cols()) throw ParameterError("GP needs one lengthscale per input dimension");
    if (!(hyper_.signal_variance > 0.0) || !(hyper_.noise_variance >= 0.0) || !(hyper_.lengthscales.array() > 0.0).all()) {
        throw ParameterError("GP hyperparameters must be positive");
    }
    Eigen::MatrixXd cov(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k <= i; ++k) cov(i, k) = cov(k, i) = kernel(inputs_.row(i), inputs_.row(k));
    }
    cov.diagonal().array() += hyper_.noise_variance;
    chol_.compute(cov);
    if (chol_.info() != Eigen::Success || !(chol_.rcond() > std::numeric_limits<double>::epsilon())) {
        throw FitError("GP covariance is not positive definite after adding jitter " +
                       std::to_string(hyper_.noise_variance));
    }
    alpha_ = chol_.solve((targets_.array() - hyper_.prior_mean).matrix());
}

double GpSurrogate::kernel(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b) const {
    const double r2 = ((a - b).array() / hyper_.lengthscales.array()).square().sum();
    return hyper_.signal_variance * std::exp(-0.5 * r2);
}

GpPrediction GpSurrogate::predict(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    Eigen::MatrixXd query = x.transpose();
    Eigen::VectorXd mean, stddev;
    predict(query, mean, stddev);
    return {mean[0], stddev[0]};
}

void GpSurrogate::predict(const Eigen::MatrixXd& points, Eigen::VectorXd& mean, Eigen::VectorXd& stddev) const {
    const Eigen::Index n = inputs_.rows();
    const Eigen::Index q = points.rows();
    if (points.cols() != inputs_.cols()) throw ParameterError("query points have the wrong input dimension");
    Eigen::MatrixXd cross(n, q);
    for (Eigen::Index c = 0; c < q; ++c) {
        for (Eigen::Index i = 0; i < n; ++i) cross(i, c) = kernel(inputs_.row(i), points.row(c));
    }
    mean = (cross.transpose() * alpha_).array() + hyper_.prior_mean;
    const Eigen::MatrixXd v = chol_.matrixL().solve(cross);
    stddev.resize(q);
    for (Eigen::Index c = 0; c < q; ++c) {
        const double var = hyper_.signal_variance - v.col(c).squaredNorm();
        if (var < 0.0) ++clamped_;
        stddev[c] = std::sqrt(std::max(var, 0.0));
    }
}

}  // namespace ehvi
