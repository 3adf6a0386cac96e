#include "ehvi/wfg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace ehvi {

namespace {

// Rows of `m` coordinates stored contiguously. Coord is double for real
// coordinates or uint32_t for per-axis ranks; both compare the same way.
template <class Coord, class Measure>
class WfgEngine {
public:
    WfgEngine(std::size_t m, Measure measure, bool prune) : m_(m), measure_(std::move(measure)), prune_(prune) {}

    // `rows` must already be in the order the sum runs over.
    double dominated(const std::vector<Coord>& rows) {
        const std::size_t k = rows.size() / m_;
        double total = 0.0;
        std::vector<Coord> limited;
        for (std::size_t i = 0; i < k; ++i) {
            const Coord* a = &rows[i * m_];
            total += evaluate(a);
            if (i + 1 == k) break;
            limited.assign(rows.begin() + static_cast<std::ptrdiff_t>((i + 1) * m_), rows.end());
            for (std::size_t p = 0; p < limited.size(); p += m_) {
                for (std::size_t j = 0; j < m_; ++j) limited[p + j] = std::max(limited[p + j], a[j]);
            }
            if (prune_) keep_nondominated(limited);
            total -= dominated(limited);
        }
        return total;
    }

    // Sorts rows lexicographically and drops every row covered by another
    // (duplicates included).
    void keep_nondominated(std::vector<Coord>& rows) const {
        const std::size_t k = rows.size() / m_;
        if (k < 2) return;
        order_.resize(k);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
            return std::lexicographical_compare(&rows[x * m_], &rows[x * m_] + m_, &rows[y * m_],
                                                &rows[y * m_] + m_);
        });
        std::vector<Coord> kept;
        kept.reserve(rows.size());
        for (std::size_t idx : order_) {
            const Coord* p = &rows[idx * m_];
            bool covered = false;
            for (std::size_t q = 0; q < kept.size() && !covered; q += m_) {
                covered = true;
                for (std::size_t j = 0; j < m_; ++j) {
                    if (kept[q + j] > p[j]) {
                        covered = false;
                        break;
                    }
                }
            }
            if (!covered) kept.insert(kept.end(), p, p + m_);
        }
        rows.swap(kept);
    }

    std::size_t evaluations() const { return evaluations_; }

private:
    double evaluate(const Coord* lower) {
        ++evaluations_;
        return measure_(lower);
    }

    std::size_t m_;
    Measure measure_;
    bool prune_;
    std::size_t evaluations_ = 0;
    mutable std::vector<std::size_t> order_;
};

std::vector<double> flatten(const std::vector<ObjectiveVector>& points) {
    std::vector<double> rows;
    for (const auto& p : points) rows.insert(rows.end(), p.begin(), p.end());
    return rows;
}

void require_inside(const std::vector<ObjectiveVector>& points, VectorView reference) {
    for (const auto& p : points) {
        if (p.size() != reference.size()) throw DimensionError("point and reference differ in length");
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (!(p[j] < reference[j])) {
                throw ReferenceBoundError("point " + format_vector(p) + " is outside the reference bound");
            }
        }
    }
}

struct VolumeMeasure {
    const double* reference;
    std::size_t m;
    double operator()(const double* lower) const {
        double v = 1.0;
        for (std::size_t j = 0; j < m; ++j) v *= reference[j] - lower[j];
        return v;
    }
};

// Hypervolume of lexicographically sorted, pre-filtered rows.
double volume_of_rows(std::vector<double> rows, VectorView reference) {
    const std::size_t m = reference.size();
    WfgEngine<double, VolumeMeasure> engine(m, VolumeMeasure{reference.data(), m}, true);
    engine.keep_nondominated(rows);
    return engine.dominated(rows);
}

}  // namespace

BoxMeasure lebesgue_measure() {
    return [](const HyperBox& box) {
        double v = 1.0;
        for (std::size_t j = 0; j < box.dimension(); ++j) v *= box.upper[j] - box.lower[j];
        return v;
    };
}

BoxMeasure gaussian_measure(GaussianBelief belief) {
    return [belief = std::move(belief)](const HyperBox& box) { return box_integral(box, belief); };
}

ObjectiveVector limit(VectorView s, VectorView a) {
    if (s.size() != a.size()) throw DimensionError("limit: vector length mismatch");
    ObjectiveVector out(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) out[j] = std::max(s[j], a[j]);
    return out;
}

MeasureResult wfg_dominated_measure(const std::vector<ObjectiveVector>& points, VectorView reference,
                                    const BoxMeasure& measure, bool prune) {
    require_inside(points, reference);
    const std::size_t m = reference.size();
    const ObjectiveVector upper(reference.begin(), reference.end());
    auto adapter = [&](const double* lower) {
        return measure(HyperBox{ObjectiveVector(lower, lower + m), upper});
    };
    std::vector<ObjectiveVector> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    WfgEngine<double, decltype(adapter)> engine(m, adapter, prune);
    std::vector<double> rows = flatten(sorted);
    if (prune) engine.keep_nondominated(rows);
    const double value = engine.dominated(rows);
    return {value, engine.evaluations()};
}

double hypervolume(const Front& front) { return volume_of_rows(flatten(front.points()), front.reference()); }

double hypervolume(const std::vector<ObjectiveVector>& points, VectorView reference) {
    std::vector<double> rows;
    for (const auto& p : points) {
        if (p.size() != reference.size()) throw DimensionError("point and reference differ in length");
        bool inside = true;
        for (std::size_t j = 0; j < p.size(); ++j) inside = inside && p[j] < reference[j];
        if (inside) rows.insert(rows.end(), p.begin(), p.end());
    }
    return volume_of_rows(std::move(rows), reference);
}

double exclusive_hypervolume(VectorView a, const std::vector<ObjectiveVector>& others, VectorView reference) {
    const std::size_t m = reference.size();
    if (a.size() != m) throw DimensionError("point and reference differ in length");
    double own = 1.0;
    for (std::size_t j = 0; j < m; ++j) own *= reference[j] - a[j];
    std::vector<double> rows;
    rows.reserve(others.size() * m);
    for (const auto& s : others) {
        if (s.size() != m) throw DimensionError("point and reference differ in length");
        bool inside = true;
        for (std::size_t j = 0; j < m; ++j) inside = inside && s[j] < reference[j];
        if (!inside) continue;
        for (std::size_t j = 0; j < m; ++j) rows.push_back(std::max(s[j], a[j]));
    }
    return own - volume_of_rows(std::move(rows), reference);
}

namespace {

struct RankedMeasure {
    // factors[j][rank] = psi(r_j) - psi(value of that rank on axis j)
    const std::vector<std::vector<double>>* factors;
    double operator()(const std::uint32_t* lower) const {
        double v = 1.0;
        for (std::size_t j = 0; j < factors->size(); ++j) v *= (*factors)[j][lower[j]];
        return v;
    }
};

}  // namespace

EhviResult ehvi_wfg(const Front& front, const GaussianBelief& belief) {
    const std::size_t m = front.objectives();
    if (belief.objectives() != m) throw DimensionError("belief and front differ in number of objectives");
    const ObjectiveVector& r = front.reference();
    const double full = full_region_integral(r, belief);
    if (front.empty()) return {full, 0};

    // Limited points only ever carry original coordinates, so each axis can
    // be rank-encoded once and psi looked up per rank.
    std::vector<std::vector<double>> axis_values(m);
    std::vector<std::vector<double>> factors(m);
    for (std::size_t j = 0; j < m; ++j) {
        auto& vals = axis_values[j];
        for (const auto& p : front.points()) vals.push_back(p[j]);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        const double mu = belief.mean()[j];
        const double sigma = belief.stddev()[j];
        const double top = psi(r[j], mu, sigma);
        for (double v : vals) factors[j].push_back(top - psi(v, mu, sigma));
    }

    std::vector<ObjectiveVector> sorted = front.points();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint32_t> rows;
    rows.reserve(sorted.size() * m);
    for (const auto& p : sorted) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto& vals = axis_values[j];
            rows.push_back(static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), p[j]) - vals.begin()));
        }
    }
    WfgEngine<std::uint32_t, RankedMeasure> engine(m, RankedMeasure{&factors}, true);
    const double dominated = engine.dominated(rows);
    return {full - dominated, engine.evaluations()};
}

}  // namespace ehvi
