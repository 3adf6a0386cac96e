#pragma once

#include <string>
#include <string_view>

#include "ehvi/clm3.hpp"
#include "ehvi/core.hpp"
#include "ehvi/gauss.hpp"
#include "ehvi/grid.hpp"
#include "ehvi/wfg.hpp"

namespace ehvi {

enum class Algorithm { grid, wfg, clm3, automatic };

// Accepts "grid", "wfg", "clm3" and "auto"; throws ParameterError otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string to_string(Algorithm algorithm);

// automatic -> clm3 for three objectives, wfg otherwise. Explicit clm3 with
// m != 3 throws UnsupportedDimensionError.
Algorithm resolve_algorithm(Algorithm algorithm, std::size_t objectives);

// Exact EHVI of an internal-convention belief against a validated front.
EhviResult compute_ehvi(const Front& front, const GaussianBelief& belief, Algorithm algorithm = Algorithm::automatic);

}  // namespace ehvi
