#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ehvi/core.hpp"

namespace ehvi {

// Finite design grid with the objective values (minimization) of every
// candidate. BO loops only read objective_values[i] once candidate i is
// queried.
struct CandidateSet {
    std::vector<std::vector<double>> design_points;
    std::vector<ObjectiveVector> objective_values;

    std::size_t size() const { return design_points.size(); }
    std::size_t input_dimension() const { return design_points.empty() ? 0 : design_points.front().size(); }
};

struct ProblemInstance {
    std::string name;
    CandidateSet candidates;
    // Nondominated subset of all candidate objective vectors.
    std::vector<ObjectiveVector> pareto_set;
    // Componentwise worst objective over the grid plus 10% of its range.
    ObjectiveVector reference;
    // hypervolume(pareto_set, reference): the best any run can reach.
    double reference_hypervolume = 0.0;
};

// Known problems:
//   "zdt2"         two objectives, concave front, d = 2
//   "three_anchor" three objectives, squared distances to three anchor points
//                  in the unit square; the Pareto set is their triangle, d = 2
std::vector<std::string> synthetic_problem_names();

// Regular grid of resolution^d candidates over [0, 1]^d. Throws
// ParameterError for unknown names or resolution < 2.
ProblemInstance synthetic_problem(std::string_view name, std::size_t resolution = 32);

}  // namespace ehvi
