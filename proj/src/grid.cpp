#include "ehvi/grid.hpp"

#include <algorithm>
#include <numeric>

namespace ehvi {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    while (exp--) out *= base;
    return out;
}

// Advances `ranks` like an odometer over [lo_j, hi] on every axis; returns
// false after the last tuple.
bool next_tuple(std::vector<std::size_t>& ranks, std::span<const std::size_t> lo, std::size_t hi) {
    for (std::size_t j = ranks.size(); j-- > 0;) {
        if (ranks[j] < hi) {
            ++ranks[j];
            return true;
        }
        ranks[j] = lo[j];
    }
    return false;
}

// Calls visit(ranks) for every nonempty cell whose lower corner is not covered
// by the front. Along the last axis the uncovered cells form a prefix.
template <class Visit>
void for_each_open_cell(const GridStructure& grid, Visit&& visit) {
    const std::size_t m = grid.objectives;
    const std::size_t n = grid.points;
    const auto& axes = grid.sorted_axes;
    std::vector<std::size_t> ranks(m, 0);
    std::vector<std::size_t> head(m - 1, 0);
    const std::vector<std::size_t> zeros(m - 1, 0);
    do {
        bool zero_width = false;
        for (std::size_t j = 0; j + 1 < m && !zero_width; ++j) {
            zero_width = axes[j][head[j]] == axes[j][head[j] + 1];
        }
        if (zero_width) continue;
        std::copy(head.begin(), head.end(), ranks.begin());
        const double h = grid.h(head);
        const auto& last = axes[m - 1];
        for (std::size_t i = 0; i <= n; ++i) {
            if (!(last[i] < h)) break;
            if (last[i] == last[i + 1]) continue;
            ranks[m - 1] = i;
            visit(ranks);
        }
    } while (next_tuple(head, zeros, n));
}

}  // namespace

std::size_t GridStructure::h_index(std::span<const std::size_t> ranks) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j + 1 < objectives; ++j) idx = idx * (points + 1) + ranks[j];
    return idx;
}

GridStructure build_grid(const Front& front) {
    const std::size_t m = front.objectives();
    const std::size_t n = front.size();
    GridStructure grid;
    grid.objectives = m;
    grid.points = n;
    grid.sorted_axes.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        auto& axis = grid.sorted_axes[j];
        axis.reserve(n + 2);
        axis.push_back(-kInf);
        for (const auto& p : front.points()) axis.push_back(p[j]);
        std::sort(axis.begin() + 1, axis.end());
        axis.push_back(front.reference()[j]);
    }
    grid.h_array.assign(ipow(n + 1, m - 1), kInf);

    // Visit points by descending last coordinate; later writes are smaller,
    // so each entry ends at the minimum over the points preceding it.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return front.points()[a][m - 1] > front.points()[b][m - 1];
    });
    std::vector<std::size_t> start(m - 1);
    for (std::size_t idx : order) {
        const auto& p = front.points()[idx];
        for (std::size_t j = 0; j + 1 < m; ++j) {
            const auto& axis = grid.sorted_axes[j];
            start[j] = static_cast<std::size_t>(std::lower_bound(axis.begin() + 1, axis.end() - 1, p[j]) - axis.begin());
        }
        std::vector<std::size_t> ranks = start;
        do {
            grid.h_array[grid.h_index(ranks)] = p[m - 1];
        } while (next_tuple(ranks, start, n));
    }
    return grid;
}

Decomposition grid_decompose(const Front& front) {
    const GridStructure grid = build_grid(front);
    const std::size_t m = grid.objectives;
    Decomposition out;
    out.kind = RegionKind::nondominated;
    for_each_open_cell(grid, [&](const std::vector<std::size_t>& ranks) {
        HyperBox box{ObjectiveVector(m), ObjectiveVector(m)};
        for (std::size_t j = 0; j < m; ++j) {
            box.lower[j] = grid.sorted_axes[j][ranks[j]];
            box.upper[j] = grid.sorted_axes[j][ranks[j] + 1];
        }
        out.boxes.push_back(std::move(box));
    });
    return out;
}

EhviResult ehvi_grid(const Front& front, const GaussianBelief& belief) {
    const std::size_t m = front.objectives();
    if (belief.objectives() != m) throw DimensionError("belief and front differ in number of objectives");
    const GridStructure grid = build_grid(front);

    // Per-axis psi differences across each grid interval; a cell's integral
    // is the product of its m interval factors.
    std::vector<std::vector<double>> widths(m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto table = psi_table(grid.sorted_axes[j], belief.mean()[j], belief.stddev()[j]);
        for (std::size_t i = 0; i + 1 < table.size(); ++i) widths[j].push_back(table[i + 1] - table[i]);
    }

    EhviResult result;
    for_each_open_cell(grid, [&](const std::vector<std::size_t>& ranks) {
        double cell = 1.0;
        for (std::size_t j = 0; j < m; ++j) cell *= widths[j][ranks[j]];
        result.value += cell;
        ++result.work;
    });
    return result;
}

}  // namespace ehvi
