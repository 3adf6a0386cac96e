#pragma once

// Independent reference computations used by the unit and acceptance suites.
// None of these call the decomposition backends they are compared against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ehvi/benchmark.hpp"
#include "ehvi/core.hpp"
#include "ehvi/gauss.hpp"
#include "ehvi/random.hpp"

namespace ehvi::testing {

inline bool rel_close(double a, double b, double tol) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= tol * scale;
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// True if some point of `front` is componentwise <= y.
inline bool covered_by_any(const std::vector<ObjectiveVector>& front, const ObjectiveVector& y) {
    for (const auto& a : front) {
        bool le = true;
        for (std::size_t j = 0; j < y.size() && le; ++j) le = a[j] <= y[j];
        if (le) return true;
    }
    return false;
}

// Hypervolume by counting dominated cell centres of a resolution^m raster over
// [min_j a_j, r_j]. Error shrinks like 1/resolution.
inline double raster_hypervolume(const std::vector<ObjectiveVector>& points, const ObjectiveVector& r,
                                 std::size_t resolution) {
    if (points.empty()) return 0.0;
    const std::size_t m = r.size();
    ObjectiveVector lo(m, kInf);
    for (const auto& p : points) {
        for (std::size_t j = 0; j < m; ++j) lo[j] = std::min(lo[j], p[j]);
    }
    ObjectiveVector step(m);
    double cell = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        step[j] = (r[j] - lo[j]) / static_cast<double>(resolution);
        cell *= step[j];
    }
    std::vector<std::size_t> idx(m, 0);
    ObjectiveVector centre(m);
    std::size_t count = 0;
    while (true) {
        for (std::size_t j = 0; j < m; ++j) centre[j] = lo[j] + (static_cast<double>(idx[j]) + 0.5) * step[j];
        if (covered_by_any(points, centre)) ++count;
        std::size_t j = 0;
        while (j < m && ++idx[j] == resolution) idx[j++] = 0;
        if (j == m) break;
    }
    return static_cast<double>(count) * cell;
}

// Exact 2-D hypervolume of a mutually nondominated set by column sums.
inline double staircase_hypervolume_2d(std::vector<ObjectiveVector> points, const ObjectiveVector& r) {
    std::sort(points.begin(), points.end());
    double area = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double right = i + 1 < points.size() ? points[i + 1][0] : r[0];
        area += (right - points[i][0]) * (r[1] - points[i][1]);
    }
    return area;
}

// Integral of Phi1 * Phi2 over the region a 2-D staircase dominates, split
// into disjoint vertical slabs [x_i, x_{i+1}) x [y_i, r2).
inline double slab_staircase_integral(const std::map<double, double>& steps, double r1, double r2,
                                      const GaussianBelief& belief2) {
    double total = 0.0;
    for (auto it = steps.begin(); it != steps.end(); ++it) {
        auto next = std::next(it);
        const double right = next == steps.end() ? r1 : next->first;
        total += box_integral(HyperBox{{it->first, it->second}, {right, r2}}, belief2);
    }
    return total;
}

// Adaptive quadrature of Phi((y - mu) / sigma) over (lo, hi].
inline double phi_integral_quadrature(double lo, double hi, double mu, double sigma, double tol = 1e-12) {
    using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
    return Rule::integrate([&](double y) { return 0.5 * std::erfc(-(y - mu) / sigma / std::sqrt(2.0)); }, lo, hi, 30,
                           tol);
}

// Validated random front in the internal convention plus a belief that keeps
// EHVI well away from zero.
struct Instance {
    Front front;
    GaussianBelief belief;
};

inline Instance random_instance(std::size_t m, std::size_t n, std::uint64_t seed) {
    const GeneratedFront gen = generate_front(m, n, seed);
    Rng rng(seed, 77);
    ObjectiveVector mean(m), stddev(m);
    for (std::size_t j = 0; j < m; ++j) {
        mean[j] = rng.uniform(4.0, 11.0);
        stddev[j] = rng.uniform(0.5, 3.0);
    }
    const Front front = validate_front(gen.frame, gen.points);
    return {front, to_internal(gen.frame, GaussianBelief(mean, stddev))};
}

}  // namespace ehvi::testing
