#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ehvi/errors.hpp"

namespace ehvi {

// Coordinates of one objective vector. Inside the library every vector uses
// the minimization convention; user-facing maximize data is negated by
// to_internal() at the boundary.
using ObjectiveVector = std::vector<double>;
using VectorView = std::span<const double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Orientation { minimize, maximize };

// Objective count, reference point and user-facing orientation.
class ProblemFrame {
public:
    // `reference` is given in the user's orientation.
    explicit ProblemFrame(ObjectiveVector reference, Orientation orientation = Orientation::minimize);

    std::size_t objectives() const { return reference_.size(); }
    Orientation orientation() const { return orientation_; }
    const ObjectiveVector& reference() const { return reference_; }
    ObjectiveVector internal_reference() const;

    bool operator==(const ProblemFrame&) const = default;

private:
    ObjectiveVector reference_;
    Orientation orientation_;
};

// Half-open box (lower, upper]; lower bounds may be -inf.
struct HyperBox {
    ObjectiveVector lower;
    ObjectiveVector upper;

    std::size_t dimension() const { return upper.size(); }
    bool empty() const;
    bool operator==(const HyperBox&) const = default;
};

// Throws DimensionError or ParameterError when the box is malformed.
void check_box(const HyperBox& box);

// a_j <= b_j everywhere and a_j < b_j somewhere.
bool dominates(VectorView a, VectorView b);

// a_j <= b_j everywhere and a != b. For a pair of distinct vectors this is the
// same relation as dominates(); the name records intent at call sites.
bool weakly_dominates(VectorView a, VectorView b);

// a_j <= b_j everywhere, equality allowed.
bool covers(VectorView a, VectorView b);

// Points not weakly dominated by any other point; duplicates collapse to one
// copy. The result is sorted lexicographically ascending.
std::vector<ObjectiveVector> nondominated_filter(std::vector<ObjectiveVector> points);

// Maps a user-convention vector into the minimization convention and back.
ObjectiveVector to_internal(const ProblemFrame& frame, VectorView v);
ObjectiveVector from_internal(const ProblemFrame& frame, VectorView v);

// A validated, mutually nondominated point set strictly inside the reference
// bound, stored in the minimization convention.
class Front {
public:
    const ProblemFrame& frame() const { return frame_; }
    std::size_t objectives() const { return reference_.size(); }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    const std::vector<ObjectiveVector>& points() const { return points_; }
    const ObjectiveVector& reference() const { return reference_; }

    // Points converted back to the user's orientation.
    std::vector<ObjectiveVector> user_points() const;

    bool operator==(const Front&) const = default;

private:
    friend Front validate_front(const ProblemFrame&, const std::vector<ObjectiveVector>&);

    Front(ProblemFrame frame, std::vector<ObjectiveVector> points);

    ProblemFrame frame_;
    ObjectiveVector reference_;
    std::vector<ObjectiveVector> points_;
};

// `points` are in the frame's orientation. Throws InvalidFrontError naming the
// first offending pair, ReferenceBoundError when a coordinate is not strictly
// better than the reference, DimensionError/ParameterError on bad shapes.
Front validate_front(const ProblemFrame& frame, const std::vector<ObjectiveVector>& points);

// H(A + {y}) - H(A) for an internal-convention vector y.
double hypervolume_improvement(VectorView y, const Front& front);

std::string format_vector(VectorView v);

}  // namespace ehvi
