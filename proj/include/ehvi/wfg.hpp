#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ehvi/core.hpp"
#include "ehvi/gauss.hpp"

namespace ehvi {

// Measure of the box (lower, reference]. Lebesgue volume gives hypervolume;
// the Gaussian box integral gives the dominated part of EHVI.
using BoxMeasure = std::function<double(const HyperBox&)>;

BoxMeasure lebesgue_measure();
BoxMeasure gaussian_measure(GaussianBelief belief);

struct MeasureResult {
    double value = 0.0;
    // Number of box-measure evaluations. At most 2^n - 1 for n points.
    std::size_t evaluations = 0;
};

// Componentwise maximum.
ObjectiveVector limit(VectorView s, VectorView a);

// Measure of the region dominated by `points` and bounded by `reference`,
// via the exclusive-contribution recursion
//   H(A) = sum_i [ measure(box(a_i, r)) - H(limit({a_{i+1}, ...}, a_i)) ].
// Points are sorted ascending (lexicographically) first. With `prune` the
// limited set is reduced to its nondominated subset before recursing; the
// value does not depend on it, only the evaluation count does.
// Every point must lie strictly inside the reference bound.
MeasureResult wfg_dominated_measure(const std::vector<ObjectiveVector>& points, VectorView reference,
                                    const BoxMeasure& measure, bool prune = true);

double hypervolume(const Front& front);

// Hypervolume of an arbitrary point list (dominated points and duplicates
// allowed; points outside the bound are ignored).
double hypervolume(const std::vector<ObjectiveVector>& points, VectorView reference);

// Volume dominated by `a` but not by any of `others`, bounded by `reference`.
// `a` must be strictly inside the bound.
double exclusive_hypervolume(VectorView a, const std::vector<ObjectiveVector>& others, VectorView reference);

struct EhviResult {
    double value = 0.0;
    // Backend-specific work count: emitted boxes (grid), box-measure
    // evaluations (wfg) or ordered-map updates (clm3).
    std::size_t work = 0;
};

// EHVI as the full-region integral minus the Gaussian integral over the
// dominated region. The belief is in the internal (minimization) convention.
EhviResult ehvi_wfg(const Front& front, const GaussianBelief& belief);

}  // namespace ehvi
