#include "ehvi/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ehvi/wfg.hpp"

namespace ehvi {

namespace {

void require_same_length(VectorView a, VectorView b) {
    if (a.size() != b.size()) {
        throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
}

void require_finite(VectorView v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw ParameterError(std::string(what) + " has a non-finite coordinate: " + format_vector(v));
        }
    }
}

}  // namespace

std::string format_vector(VectorView v) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

ProblemFrame::ProblemFrame(ObjectiveVector reference, Orientation orientation)
    : reference_(std::move(reference)), orientation_(orientation) {
    if (reference_.size() < 2) {
        throw DimensionError("a problem frame needs at least 2 objectives, got " +
                             std::to_string(reference_.size()));
    }
    require_finite(reference_, "reference point");
}

ObjectiveVector ProblemFrame::internal_reference() const { return to_internal(*this, reference_); }

bool HyperBox::empty() const {
    for (std::size_t j = 0; j < upper.size(); ++j) {
        if (!(lower[j] < upper[j])) return true;
    }
    return false;
}

void check_box(const HyperBox& box) {
    if (box.lower.size() != box.upper.size()) {
        throw DimensionError("box bounds differ in length");
    }
    for (std::size_t j = 0; j < box.upper.size(); ++j) {
        const double l = box.lower[j];
        const double u = box.upper[j];
        if (!std::isfinite(u) || std::isnan(l) || l == kInf || l > u) {
            throw ParameterError("malformed box on axis " + std::to_string(j) + ": lower " +
                                 format_vector(box.lower) + ", upper " + format_vector(box.upper));
        }
    }
}

bool covers(VectorView a, VectorView b) {
    require_same_length(a, b);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) return false;
    }
    return true;
}

bool dominates(VectorView a, VectorView b) {
    require_same_length(a, b);
    bool strict = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) return false;
        if (a[j] < b[j]) strict = true;
    }
    return strict;
}

bool weakly_dominates(VectorView a, VectorView b) { return dominates(a, b); }

std::vector<ObjectiveVector> nondominated_filter(std::vector<ObjectiveVector> points) {
    if (points.empty()) return points;
    const std::size_t m = points.front().size();
    for (const auto& p : points) {
        if (p.size() != m) throw DimensionError("points of differing length passed to nondominated_filter");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Any dominator of p precedes p lexicographically, and a dominated
    // dominator is itself covered by a kept point, so only kept points matter.
    std::vector<ObjectiveVector> kept;
    kept.reserve(points.size());
    for (auto& p : points) {
        const bool dominated =
            std::any_of(kept.begin(), kept.end(), [&](const ObjectiveVector& k) { return covers(k, p); });
        if (!dominated) kept.push_back(std::move(p));
    }
    return kept;
}

ObjectiveVector to_internal(const ProblemFrame& frame, VectorView v) {
    if (v.size() != frame.objectives()) {
        throw DimensionError("expected " + std::to_string(frame.objectives()) + " objectives, got " +
                             std::to_string(v.size()));
    }
    ObjectiveVector out(v.begin(), v.end());
    if (frame.orientation() == Orientation::maximize) {
        for (double& x : out) x = -x;
    }
    return out;
}

ObjectiveVector from_internal(const ProblemFrame& frame, VectorView v) {
    // Negation is its own inverse.
    return to_internal(frame, v);
}

Front::Front(ProblemFrame frame, std::vector<ObjectiveVector> points)
    : frame_(std::move(frame)), reference_(frame_.internal_reference()), points_(std::move(points)) {}

std::vector<ObjectiveVector> Front::user_points() const {
    std::vector<ObjectiveVector> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(from_internal(frame_, p));
    return out;
}

Front validate_front(const ProblemFrame& frame, const std::vector<ObjectiveVector>& points) {
    const ObjectiveVector r = frame.internal_reference();
    std::vector<ObjectiveVector> internal;
    internal.reserve(points.size());
    for (const auto& p : points) {
        ObjectiveVector q = to_internal(frame, p);
        require_finite(q, "front point");
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (!(q[j] < r[j])) {
                throw ReferenceBoundError("point " + format_vector(p) +
                                          " is not strictly inside the reference bound " +
                                          format_vector(frame.reference()));
            }
        }
        internal.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < internal.size(); ++i) {
        for (std::size_t k = i + 1; k < internal.size(); ++k) {
            if (covers(internal[i], internal[k]) || covers(internal[k], internal[i])) {
                throw InvalidFrontError("points " + format_vector(points[i]) + " and " +
                                        format_vector(points[k]) + " are not mutually nondominated");
            }
        }
    }
    return Front(frame, std::move(internal));
}

double hypervolume_improvement(VectorView y, const Front& front) {
    const ObjectiveVector& r = front.reference();
    if (y.size() != r.size()) throw DimensionError("candidate has wrong number of objectives");
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (!(y[j] < r[j])) return 0.0;
    }
    return exclusive_hypervolume(y, front.points(), r);
}

}  // namespace ehvi
