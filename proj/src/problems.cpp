#include "ehvi/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ehvi/wfg.hpp"

namespace ehvi {

namespace {

ObjectiveVector zdt2(const std::vector<double>& x) {
    const double g = 1.0 + 9.0 * x[1];
    const double ratio = x[0] / g;
    return {x[0], g * (1.0 - ratio * ratio)};
}

ObjectiveVector three_anchor(const std::vector<double>& x) {
    static constexpr std::array<std::array<double, 2>, 3> anchors{{{0.30, 0.30}, {0.65, 0.35}, {0.45, 0.70}}};
    ObjectiveVector out;
    for (const auto& c : anchors) {
        const double dx = x[0] - c[0];
        const double dy = x[1] - c[1];
        out.push_back(dx * dx + dy * dy);
    }
    return out;
}

}  // namespace

std::vector<std::string> synthetic_problem_names() { return {"zdt2", "three_anchor"}; }

ProblemInstance synthetic_problem(std::string_view name, std::size_t resolution) {
    ObjectiveVector (*objective)(const std::vector<double>&) = nullptr;
    if (name == "zdt2") objective = zdt2;
    if (name == "three_anchor") objective = three_anchor;
    if (!objective) throw ParameterError("unknown synthetic problem '" + std::string(name) + "'");
    if (resolution < 2) throw ParameterError("synthetic problem resolution must be at least 2");

    ProblemInstance inst;
    inst.name = std::string(name);
    const double step = 1.0 / static_cast<double>(resolution - 1);
    for (std::size_t i = 0; i < resolution; ++i) {
        for (std::size_t k = 0; k < resolution; ++k) {
            std::vector<double> x{static_cast<double>(i) * step, static_cast<double>(k) * step};
            inst.candidates.objective_values.push_back(objective(x));
            inst.candidates.design_points.push_back(std::move(x));
        }
    }

    const std::size_t m = inst.candidates.objective_values.front().size();
    ObjectiveVector lo(m, kInf);
    ObjectiveVector hi(m, -kInf);
    for (const auto& y : inst.candidates.objective_values) {
        for (std::size_t j = 0; j < m; ++j) {
            lo[j] = std::min(lo[j], y[j]);
            hi[j] = std::max(hi[j], y[j]);
        }
    }
    inst.reference.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double range = hi[j] - lo[j];
        inst.reference[j] = hi[j] + 0.1 * (range > 0.0 ? range : std::max(1.0, std::abs(hi[j])));
    }
    inst.pareto_set = nondominated_filter(inst.candidates.objective_values);
    inst.reference_hypervolume = hypervolume(inst.pareto_set, inst.reference);
    return inst;
}

}  // namespace ehvi
