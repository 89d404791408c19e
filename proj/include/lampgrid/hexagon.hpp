#pragma once

// The hexagons H_n (corners (+-n,0), (0,+-n), (n,-n), (-n,n)) and the
// triangles T_n (corners (0,0), (0,-n), (n,-n)) that organise the
// upper-bound construction.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "lampgrid/element.hpp"

namespace lampgrid {

constexpr bool in_hexagon(GridPosition g, std::int64_t n) noexcept {
    auto abs = [](std::int64_t v) { return v < 0 ? -v : v; };
    return abs(g.p) <= n && abs(g.q) <= n && abs(g.p + g.q) <= n;
}

/// Least n with g in H_n.
constexpr std::int64_t hex_radius(GridPosition g) noexcept {
    auto abs = [](std::int64_t v) { return v < 0 ? -v : v; };
    return std::max({abs(g.p), abs(g.q), abs(g.p + g.q)});
}

/// Least n such that every lit lamp of g and its lamplighter lie in H_n.
inline std::int64_t hex_param(const Element& g) {
    std::int64_t n = hex_radius(g.pos);
    for (auto l : g.lamps) n = std::max(n, hex_radius(l));
    return n;
}

constexpr bool in_T(GridPosition g, std::int64_t n) noexcept {
    return 0 <= g.p && g.p <= n && -n <= g.q && g.q <= 0 && g.p <= -g.q;
}

/// Lampstand points inside H_n in canonical order.
inline std::vector<GridPosition> lampstand_in_hexagon(std::int64_t n) {
    std::vector<GridPosition> out;
    for (std::int64_t i = -n; i <= -1; ++i) out.push_back({i, 0});
    for (std::int64_t j = -n; j <= n; ++j) out.push_back({0, j});
    return out;
}

}  // namespace lampgrid
