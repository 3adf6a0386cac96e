#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ehvi/core.hpp"
#include "ehvi/gauss.hpp"
#include "ehvi/wfg.hpp"

namespace ehvi {

// 2-D staircase of nondominated (y1, y2) projections with the running
// integral of Phi1 * Phi2 over the region it dominates inside (r1, r2).
// Keys ascend strictly while values descend strictly.
class Staircase {
public:
    // Belief and reference are the first two axes, minimization convention.
    Staircase(double r1, double r2, double mu1, double sigma1, double mu2, double sigma2);

    // Adds p unless an existing step covers it. Returns the exact increase
    // of running_integral(). Throws ReferenceBoundError unless p < r.
    double insert(double y1, double y2);

    double running_integral() const { return running_; }
    const std::map<double, double>& steps() const { return steps_; }

    // Insertions plus removals performed on the ordered map so far.
    std::size_t map_operations() const { return insertions_ + removals_; }
    std::size_t insertions() const { return insertions_; }
    std::size_t removals() const { return removals_; }

private:
    double f1(double x) const { return psi(x, mu1_, sigma1_); }
    double f2(double y) const { return psi(y, mu2_, sigma2_); }

    double r1_, r2_;
    double mu1_, sigma1_, mu2_, sigma2_;
    std::map<double, double> steps_;
    double running_ = 0.0;
    std::size_t insertions_ = 0;
    std::size_t removals_ = 0;
};

// Per-level record of a sweep, for inspection.
struct SweepTrace {
    std::vector<double> levels;         // distinct third coordinates, ascending
    std::vector<double> slices;         // dominated-region integral of each slab above a level
    std::vector<double> running;        // cross-section integral after inserting each level
    std::size_t map_operations = 0;
};

// Sweep along the third axis. `work` is the number of ordered-map updates
// (at most 2n). Throws UnsupportedDimensionError unless m == 3.
EhviResult ehvi_clm3(const Front& front, const GaussianBelief& belief, SweepTrace* trace = nullptr);

}  // namespace ehvi
