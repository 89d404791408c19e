#pragma once

// Button presses. Pressing the button at a position toggles a finite set of
// lamps on the lampstand:
//
//   * on the lampstand, just the lamp at that position;
//   * above the t-axis (p > 0), the t-axis lamps q+r for which C(p, r) is odd;
//   * below the t-axis (p < 0), whatever the relation a^s = a a^t forces,
//     i.e. effect(p, q) = effect(p+1, q) ^ effect(p, q+1), unwound towards
//     the lampstand:
//        q < 0:  effect(p, q) = effect(p+1, q)   ^ effect(p, q+1)
//        q > 0:  effect(p, q) = effect(p+1, q-1) ^ effect(p, q-1)
//
// Results for p < 0 are memoized per thread.

#include <cstdint>
#include <unordered_map>

#include "lampgrid/grid.hpp"

namespace lampgrid {

namespace detail {

inline LampConfig pascal_row_effect(GridPosition pos) {
    std::vector<GridPosition> lit;
    // Lucas: C(p, r) is odd iff the bits of r are a subset of the bits of p.
    for (std::int64_t r = 0; r <= pos.p; ++r)
        if ((r & pos.p) == r) lit.push_back({0, checked_coordinate(pos.q + r)});
    return LampConfig::from_toggles(std::move(lit));
}

using PressMemo = std::unordered_map<GridPosition, LampConfig, GridPositionHash>;

inline PressMemo& press_memo() {
    thread_local PressMemo memo;
    return memo;
}

}  // namespace detail

inline const LampConfig& press_effect(GridPosition pos) {
    auto& memo = detail::press_memo();
    if (auto it = memo.find(pos); it != memo.end()) return it->second;

    if (is_lampstand(pos)) return memo.emplace(pos, LampConfig{pos}).first->second;
    if (pos.p > 0) return memo.emplace(pos, detail::pascal_row_effect(pos)).first->second;

    // p < 0 and q != 0: fill the rectangle between pos and the lampstand so
    // that every dependency is already memoized when a cell is computed.
    if (pos.q < 0) {
        for (std::int64_t i = -1; i >= pos.p; --i)
            for (std::int64_t j = -1; j >= pos.q; --j) {
                GridPosition cell{i, j};
                if (memo.contains(cell)) continue;
                LampConfig e = press_effect({i + 1, j});
                e.toggle(press_effect({i, j + 1}));
                memo.emplace(cell, std::move(e));
            }
    } else {
        for (std::int64_t j = 1; j <= pos.q; ++j)
            for (std::int64_t i = -1; i >= pos.p; --i) {
                GridPosition cell{i, j};
                if (memo.contains(cell)) continue;
                LampConfig e = press_effect({i + 1, j - 1});
                e.toggle(press_effect({i, j - 1}));
                memo.emplace(cell, std::move(e));
            }
    }
    return memo.at(pos);
}

/// Drops this thread's memoized press effects.
inline void clear_press_memo() { detail::press_memo().clear(); }

}  // namespace lampgrid
