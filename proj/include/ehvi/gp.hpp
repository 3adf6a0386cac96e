#pragma once

#include <cstddef>

#include <Eigen/Core>
#include <Eigen/Cholesky>

namespace ehvi {

struct GpHyperparameters {
    Eigen::VectorXd lengthscales;  // one per input dimension
    double signal_variance = 1.0;
    double noise_variance = 1e-8;
    double prior_mean = 0.0;
};

struct GpPrediction {
    double mean = 0.0;
    double stddev = 0.0;
};

// Deterministic hyperparameters from the data alone: every lengthscale is the
// median pairwise distance of the inputs, the signal variance is the target
// variance, the prior mean is the target mean and the noise is
// `relative_jitter` times the signal variance. Degenerate data (one input,
// constant targets) falls back to unit lengthscale/variance.
GpHyperparameters heuristic_hyperparameters(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
                                            double relative_jitter = 1e-8);

// Squared-exponential GP regression with a constant prior mean. Rows of
// `inputs` are training points.
class GpSurrogate {
public:
    // Throws FitError when the jittered covariance is not positive definite,
    // ParameterError on shape mismatches or empty data.
    GpSurrogate(Eigen::MatrixXd inputs, Eigen::VectorXd targets, GpHyperparameters hyper);

    GpPrediction predict(const Eigen::Ref<const Eigen::VectorXd>& x) const;

    // Batch prediction; rows of `points` are query inputs.
    void predict(const Eigen::MatrixXd& points, Eigen::VectorXd& mean, Eigen::VectorXd& stddev) const;

    double kernel(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b) const;

    const GpHyperparameters& hyperparameters() const { return hyper_; }

    // Number of predictions whose variance came out negative and was clamped
    // to zero.
    std::size_t clamped_variances() const { return clamped_; }

private:
    Eigen::MatrixXd inputs_;
    Eigen::VectorXd targets_;
    GpHyperparameters hyper_;
    Eigen::LLT<Eigen::MatrixXd> chol_;
    Eigen::VectorXd alpha_;
    mutable std::size_t clamped_ = 0;
};

}  // namespace ehvi
