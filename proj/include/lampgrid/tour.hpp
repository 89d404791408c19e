#pragma once

// Shortest closed lattice walk from the origin touching the three lines
//   L1: p + q = n,   L2: q = -n,   L3: p = -n
// in any order, with unit steps in +-s and +-t. Lighting the lamps
// (0,n), (0,-n), (-n,0) forces a walk like this, so its length bounds
// the word length of g_n from below.

#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "lampgrid/grid.hpp"

namespace lampgrid {

inline std::int64_t tour_lower_bound(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("tour_lower_bound needs n >= 0");
    const std::int64_t lo = -2 * n, hi = 2 * n, side = hi - lo + 1;
    auto lines_at = [n](std::int64_t p, std::int64_t q) {
        return static_cast<unsigned>((p + q == n ? 1 : 0) | (q == -n ? 2 : 0) | (p == -n ? 4 : 0));
    };
    auto index = [&](std::int64_t p, std::int64_t q, unsigned mask) {
        return static_cast<std::size_t>(((p - lo) * side + (q - lo)) * 8 + mask);
    };

    std::vector<std::int32_t> dist(static_cast<std::size_t>(side * side * 8), -1);
    struct State { std::int64_t p, q; unsigned mask; };
    std::deque<State> queue;
    const unsigned start = lines_at(0, 0);
    dist[index(0, 0, start)] = 0;
    queue.push_back({0, 0, start});

    constexpr std::array<std::array<int, 2>, 4> steps = {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    while (!queue.empty()) {
        auto [p, q, mask] = queue.front();
        queue.pop_front();
        const auto d = dist[index(p, q, mask)];
        if (mask == 7 && p == 0 && q == 0) return d;
        for (auto [dp, dq] : steps) {
            std::int64_t np = p + dp, nq = q + dq;
            if (np < lo || np > hi || nq < lo || nq > hi) continue;
            unsigned nm = mask | lines_at(np, nq);
            auto& slot = dist[index(np, nq, nm)];
            if (slot >= 0) continue;
            slot = d + 1;
            queue.push_back({np, nq, nm});
        }
    }
    throw std::logic_error("tour search exhausted its window");
}

}  // namespace lampgrid
