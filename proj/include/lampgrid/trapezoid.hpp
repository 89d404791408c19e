#pragma once

// Trapezoids of bits. The bottom row is a given sequence S of length m;
// each higher row is one entry shorter and sits between the entries below
// it. Rows are filled upwards, right to left, so that every entry except
// the left end of a row and the entries of the top row is the mod-2 sum of
// the (at most two) entries directly above it. The entries that break the
// rule are the summits.
//
// Laid over the grid with the bottom row on an axis segment and row k one
// unit further away, the entries count (mod 2) the signals arriving from
// button presses at the summits. Pressing exactly the summits therefore
// lights exactly S.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lampgrid/grid.hpp"

namespace lampgrid {

/// A summit, numbered from 1: row 1 is the bottom row, index 1 the left end.
struct Summit {
    int row = 1;
    int index = 1;

    friend auto operator<=>(const Summit&, const Summit&) = default;
};

struct TrapezoidSolution {
    std::vector<std::uint8_t> base;
    int rows = 1;
    /// entries[k] is row k+1; entries[k].size() == base.size() - k.
    std::vector<std::vector<std::uint8_t>> entries;
    std::vector<Summit> summits;

    /// Grid positions of the summits when the bottom-left entry sits at
    /// `base_start` and rows grow in the +s direction along +t.
    std::vector<GridPosition> press_positions(GridPosition base_start) const {
        std::vector<GridPosition> out;
        out.reserve(summits.size());
        for (auto [row, index] : summits)
            out.push_back(base_start + GridPosition{row - 1, index - 1});
        return out;
    }
};

inline TrapezoidSolution trapezoid_summits(const std::vector<std::uint8_t>& bits, int rows) {
    const auto m = static_cast<int>(bits.size());
    if (rows < 1 || rows > m)
        throw std::out_of_range("trapezoid needs 1 <= rows <= " + std::to_string(m) + ", got " +
                                std::to_string(rows));

    TrapezoidSolution sol{bits, rows, {}, {}};
    sol.entries.push_back(bits);
    for (auto& b : sol.entries.back()) b &= 1;

    for (int k = 1; k < rows; ++k) {
        const auto& below = sol.entries.back();
        const auto len = below.size();
        std::vector<std::uint8_t> above(len - 1);
        // Right end below has a single upper neighbour; every other entry
        // below[i+1] needs above[i] ^ above[i+1] == below[i+1].
        above[len - 2] = below[len - 1];
        for (auto i = static_cast<std::ptrdiff_t>(len) - 3; i >= 0; --i)
            above[i] = below[i + 1] ^ above[i + 1];
        sol.entries.push_back(std::move(above));
    }

    for (int k = 0; k + 1 < rows; ++k)
        if (sol.entries[k][0] != sol.entries[k + 1][0]) sol.summits.push_back({k + 1, 1});
    const auto& top = sol.entries.back();
    for (std::size_t i = 0; i < top.size(); ++i)
        if (top[i]) sol.summits.push_back({rows, static_cast<int>(i) + 1});
    return sol;
}

}  // namespace lampgrid
