#include "ehvi/ehvi.hpp"

namespace ehvi {

Algorithm parse_algorithm(std::string_view name) {
    if (name == "grid") return Algorithm::grid;
    if (name == "wfg") return Algorithm::wfg;
    if (name == "clm3") return Algorithm::clm3;
    if (name == "auto") return Algorithm::automatic;
    throw ParameterError("unknown algorithm '" + std::string(name) + "' (expected grid, wfg, clm3 or auto)");
}

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::grid: return "grid";
        case Algorithm::wfg: return "wfg";
        case Algorithm::clm3: return "clm3";
        case Algorithm::automatic: return "auto";
    }
    return "auto";
}

Algorithm resolve_algorithm(Algorithm algorithm, std::size_t objectives) {
    if (algorithm == Algorithm::automatic) return objectives == 3 ? Algorithm::clm3 : Algorithm::wfg;
    if (algorithm == Algorithm::clm3 && objectives != 3) {
        throw UnsupportedDimensionError("clm3 needs exactly 3 objectives, got " + std::to_string(objectives));
    }
    return algorithm;
}

EhviResult compute_ehvi(const Front& front, const GaussianBelief& belief, Algorithm algorithm) {
    switch (resolve_algorithm(algorithm, front.objectives())) {
        case Algorithm::grid: return ehvi_grid(front, belief);
        case Algorithm::clm3: return ehvi_clm3(front, belief);
        default: return ehvi_wfg(front, belief);
    }
}

}  // namespace ehvi
