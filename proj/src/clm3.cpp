#include "ehvi/clm3.hpp"

#include <algorithm>
#include <iterator>

namespace ehvi {

Staircase::Staircase(double r1, double r2, double mu1, double sigma1, double mu2, double sigma2)
    : r1_(r1), r2_(r2), mu1_(mu1), sigma1_(sigma1), mu2_(mu2), sigma2_(sigma2) {
    // Validates sigma.
    (void)psi(r1, mu1, sigma1);
    (void)psi(r2, mu2, sigma2);
}

double Staircase::insert(double y1, double y2) {
    if (!(y1 < r1_) || !(y2 < r2_)) {
        throw ReferenceBoundError("staircase point " + format_vector(std::vector<double>{y1, y2}) +
                                  " is outside the reference bound");
    }
    auto after = steps_.upper_bound(y1);
    if (after != steps_.begin() && std::prev(after)->second <= y2) return 0.0;

    // Steps with key >= y1 and value >= y2 are now covered by p.
    auto first = steps_.lower_bound(y1);
    double top = first == steps_.begin() ? r2_ : std::prev(first)->second;
    const double bottom = f2(y2);
    double start = y1;
    double delta = 0.0;
    auto it = first;
    for (; it != steps_.end() && it->second >= y2; ++it) {
        delta += (f1(it->first) - f1(start)) * (f2(top) - bottom);
        start = it->first;
        top = it->second;
        ++removals_;
    }
    const double end = it == steps_.end() ? r1_ : it->first;
    delta += (f1(end) - f1(start)) * (f2(top) - bottom);

    steps_.erase(first, it);
    steps_.emplace_hint(it, y1, y2);
    ++insertions_;
    running_ += delta;
    return delta;
}

EhviResult ehvi_clm3(const Front& front, const GaussianBelief& belief, SweepTrace* trace) {
    if (front.objectives() != 3) {
        throw UnsupportedDimensionError("clm3 needs exactly 3 objectives, got " + std::to_string(front.objectives()));
    }
    if (belief.objectives() != 3) throw DimensionError("belief and front differ in number of objectives");
    const auto& r = front.reference();
    const auto& mu = belief.mean();
    const auto& sigma = belief.stddev();
    const double full = full_region_integral(r, belief);

    std::vector<const ObjectiveVector*> order;
    order.reserve(front.size());
    for (const auto& p : front.points()) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const ObjectiveVector* a, const ObjectiveVector* b) {
        return (*a)[2] < (*b)[2];
    });

    Staircase stairs(r[0], r[1], mu[0], sigma[0], mu[1], sigma[1]);
    double dominated = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        const double level = (*order[i])[2];
        while (i < order.size() && (*order[i])[2] == level) {
            stairs.insert((*order[i])[0], (*order[i])[1]);
            ++i;
        }
        const double next = i < order.size() ? (*order[i])[2] : r[2];
        const double slice =
            stairs.running_integral() * (psi(next, mu[2], sigma[2]) - psi(level, mu[2], sigma[2]));
        dominated += slice;
        if (trace) {
            trace->levels.push_back(level);
            trace->slices.push_back(slice);
            trace->running.push_back(stairs.running_integral());
        }
    }
    if (trace) trace->map_operations = stairs.map_operations();
    return {full - dominated, stairs.map_operations()};
}

}  // namespace ehvi
