#include "ehvi/gauss.hpp"

#include <cmath>
#include <numbers>

namespace ehvi {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;  // 1/sqrt(2 pi)

void require_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("standard deviation must be positive and finite, got " + std::to_string(sigma));
    }
}

}  // namespace

GaussianBelief::GaussianBelief(ObjectiveVector mean, ObjectiveVector stddev)
    : mean_(std::move(mean)), stddev_(std::move(stddev)) {
    if (mean_.size() != stddev_.size()) {
        throw DimensionError("belief mean and stddev differ in length");
    }
    for (std::size_t j = 0; j < mean_.size(); ++j) {
        if (!std::isfinite(mean_[j])) throw ParameterError("belief mean must be finite");
        require_sigma(stddev_[j]);
    }
}

GaussianBelief to_internal(const ProblemFrame& frame, const GaussianBelief& belief) {
    return GaussianBelief(to_internal(frame, belief.mean()), belief.stddev());
}

double std_normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_normal_cdf(double x) {
    if (x == -kInf) return 0.0;
    if (x == kInf) return 1.0;
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double psi(double a, double mu, double sigma) {
    require_sigma(sigma);
    if (a == -kInf) return 0.0;
    const double z = (a - mu) / sigma;
    return (a - mu) * std_normal_cdf(z) + sigma * std_normal_pdf(z);
}

double box_integral(const HyperBox& box, const GaussianBelief& belief) {
    check_box(box);
    if (box.dimension() != belief.objectives()) {
        throw DimensionError("box has " + std::to_string(box.dimension()) + " axes, belief has " +
                             std::to_string(belief.objectives()));
    }
    double product = 1.0;
    for (std::size_t j = 0; j < box.dimension(); ++j) {
        const double mu = belief.mean()[j];
        const double sigma = belief.stddev()[j];
        product *= psi(box.upper[j], mu, sigma) - psi(box.lower[j], mu, sigma);
    }
    return product;
}

double full_region_integral(VectorView reference, const GaussianBelief& belief) {
    if (reference.size() != belief.objectives()) {
        throw DimensionError("reference and belief differ in length");
    }
    double product = 1.0;
    for (std::size_t j = 0; j < reference.size(); ++j) {
        product *= psi(reference[j], belief.mean()[j], belief.stddev()[j]);
    }
    return product;
}

double full_region_integral(const ProblemFrame& frame, const GaussianBelief& internal_belief) {
    return full_region_integral(frame.internal_reference(), internal_belief);
}

std::vector<double> psi_table(VectorView abscissae, double mu, double sigma) {
    std::vector<double> out;
    out.reserve(abscissae.size());
    for (double a : abscissae) out.push_back(psi(a, mu, sigma));
    return out;
}

}  // namespace ehvi
