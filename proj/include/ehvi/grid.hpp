#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ehvi/core.hpp"
#include "ehvi/gauss.hpp"
#include "ehvi/wfg.hpp"

namespace ehvi {

// Coordinate grid induced by a front plus the H-array dominance lookup.
//
// sorted_axes[j] has n + 2 entries: -inf, the n sorted j-th coordinates, r_j.
// A cell is addressed by ranks (i_1, ..., i_m), i_j in [0, n], and spans
// (sorted_axes[j][i_j], sorted_axes[j][i_j + 1]] on each axis.
//
// h_array holds, for each rank tuple of the first m - 1 axes, the smallest
// m-th coordinate among front points whose first m - 1 coordinates are <= the
// cell's lower corner (+inf when there is none). The lower corner of cell
// (i_1, ..., i_m) is covered by the front iff sorted_axes[m-1][i_m] >= H.
struct GridStructure {
    std::size_t objectives = 0;
    std::size_t points = 0;
    std::vector<std::vector<double>> sorted_axes;
    std::vector<double> h_array;  // row-major over (n + 1)^(m - 1) rank tuples

    std::size_t h_index(std::span<const std::size_t> ranks) const;
    double h(std::span<const std::size_t> ranks) const { return h_array[h_index(ranks)]; }
};

GridStructure build_grid(const Front& front);

enum class RegionKind { nondominated, dominated };

// Disjoint half-open boxes whose union is the declared region.
struct Decomposition {
    std::vector<HyperBox> boxes;
    RegionKind kind = RegionKind::nondominated;
};

// Cells of the grid whose lower corner is not covered by the front, i.e. the
// nondominated region bounded by r. Zero-width cells are skipped.
Decomposition grid_decompose(const Front& front);

// Sum of box integrals over the grid decomposition, streamed; `work` is the
// number of boxes integrated.
EhviResult ehvi_grid(const Front& front, const GaussianBelief& belief);

}  // namespace ehvi
