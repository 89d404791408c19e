#pragma once

// Text pictures of a state on the grid around H_n. The rhombic slant is not
// drawn: t grows to the right, s grows upwards.

#include <algorithm>
#include <cstdint>
#include <string>

#include "lampgrid/element.hpp"
#include "lampgrid/hexagon.hpp"

namespace lampgrid {

inline constexpr std::string_view render_legend =
    "t increases to the right, s increases upward (rhombic slant not drawn)\n"
    "@ lamplighter  & lamplighter on a lit lamp  * lit lamp  o unlit lamp  . grid point\n";

/// ASCII window covering H_n, widened if needed so that every lit lamp and
/// the lamplighter are visible.
inline std::string render_ascii(const Element& g, std::int64_t n) {
    n = std::max({n, hex_param(g), std::int64_t{1}});
    std::string out;
    for (std::int64_t p = n; p >= -n; --p) {
        std::string line;
        for (std::int64_t q = -n; q <= n; ++q) {
            const GridPosition at{p, q};
            char c = ' ';
            if (in_hexagon(at, n)) {
                const bool lit = g.lamps.contains(at);
                if (at == g.pos)
                    c = lit ? '&' : '@';
                else if (lit)
                    c = '*';
                else
                    c = is_lampstand(at) ? 'o' : '.';
            }
            line += c;
            if (q < n) line += ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

}  // namespace lampgrid
