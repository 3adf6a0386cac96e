#pragma once

#include <vector>

#include "ehvi/core.hpp"

namespace ehvi {

// Independent Gaussian marginals of a candidate's objectives.
class GaussianBelief {
public:
    GaussianBelief(ObjectiveVector mean, ObjectiveVector stddev);

    std::size_t objectives() const { return mean_.size(); }
    const ObjectiveVector& mean() const { return mean_; }
    const ObjectiveVector& stddev() const { return stddev_; }

private:
    ObjectiveVector mean_;
    ObjectiveVector stddev_;
};

// Belief expressed in the frame's orientation, mapped to minimization.
GaussianBelief to_internal(const ProblemFrame& frame, const GaussianBelief& belief);

double std_normal_pdf(double x);

// Computed from erfc so the lower tail keeps full relative precision.
double std_normal_cdf(double x);

// Integral of Phi((y - mu) / sigma) over (-inf, a]:
//   (a - mu) Phi((a - mu) / sigma) + sigma phi((a - mu) / sigma)
// psi(-inf, ...) is exactly 0. Throws ParameterError unless sigma > 0.
double psi(double a, double mu, double sigma);

// Integral of prod_j Phi((y_j - mu_j) / sigma_j) over the box, i.e. the
// product of per-axis psi differences. O(m).
double box_integral(const HyperBox& box, const GaussianBelief& belief);

// Box integral over (-inf, r] for an internal-convention reference r.
double full_region_integral(VectorView reference, const GaussianBelief& belief);
double full_region_integral(const ProblemFrame& frame, const GaussianBelief& internal_belief);

// psi evaluated at a sorted list of abscissae for one axis; backends that
// reuse coordinates many times read these instead of calling psi per box.
std::vector<double> psi_table(VectorView abscissae, double mu, double sigma);

}  // namespace ehvi
