#pragma once

// Short words for elements whose lamps and lamplighter lie in H_n.
//
// Each A-letter moves the lamplighter one step and may press the buttons at
// either end of that step for free, so a witness is a walk from the origin
// to L(g) together with a set of visited vertices to press. The walks below
// have length at most 6n:
//
//   p >= 0, L(g) in T_n : s-axis out and back, then the t-axis from n to -n,
//                         then across to L(g).
//   p >= 0 otherwise    : s-axis out and back, then down the t-axis and round
//                         a trapezoid whose summits light the top of the
//                         t-axis.
//   p < 0,  q <= 0      : t-axis out and back, down to (0,-n), along q = -n
//                         pressing to light the s-axis; the spill onto the
//                         t-axis is corrected on the t-axis legs.
//   p < 0,  q > 0       : the mirror image through (0,n) and (-n,n).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lampgrid/element.hpp"
#include "lampgrid/gf2.hpp"
#include "lampgrid/hexagon.hpp"
#include "lampgrid/trapezoid.hpp"
#include "lampgrid/words.hpp"

namespace lampgrid {

class witness_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A lamplighter walk in time order plus the vertices pressed along it.
struct Walk {
    std::vector<GridPosition> path{GridPosition{}};
    std::vector<GridPosition> presses;

    GridPosition here() const { return path.back(); }

    /// Straight-line moves, s first and then t.
    void go(GridPosition target) {
        GridPosition at = here();
        while (at.p != target.p) {
            at.p += target.p > at.p ? 1 : -1;
            path.push_back(at);
        }
        while (at.q != target.q) {
            at.q += target.q > at.q ? 1 : -1;
            path.push_back(at);
        }
    }

    void press(GridPosition v) { presses.push_back(v); }
    void press_all(const LampConfig& lamps) {
        for (auto l : lamps) press(l);
    }

    std::size_t length() const { return path.size() - 1; }

    /// The pressed vertices with repeats cancelled in pairs.
    std::vector<GridPosition> net_presses() const {
        auto v = presses;
        std::sort(v.begin(), v.end());
        std::vector<GridPosition> out;
        for (std::size_t i = 0; i < v.size();) {
            std::size_t j = i;
            while (j < v.size() && v[j] == v[i]) ++j;
            if ((j - i) % 2) out.push_back(v[i]);
            i = j;
        }
        return out;
    }

    /// Spells the walk over A: one letter per step, each press fused into
    /// the step that leaves or enters its vertex the first time it is seen.
    Word to_word() const {
        const auto net = net_presses();
        if (length() == 0) {
            if (net.empty()) return {};
            if (net.size() == 1 && net[0] == GridPosition{}) return {{{Base::a, 1}}, Alphabet::metric};
            throw witness_error("press off a zero-length walk");
        }
        std::vector<std::uint8_t> before(length(), 0), after(length(), 0);
        for (auto v : net) {
            auto it = std::find(path.begin(), path.end(), v);
            if (it == path.end()) throw witness_error("press at a vertex the walk never visits");
            auto idx = static_cast<std::size_t>(it - path.begin());
            if (idx == 0)
                before[0] = 1;
            else
                after[idx - 1] = 1;
        }

        std::vector<Letter> timeline;
        timeline.reserve(length());
        for (std::size_t i = 0; i < length(); ++i) {
            GridPosition d = path[i + 1] - path[i];
            const bool along_s = d.p != 0;
            const int sign = static_cast<int>(along_s ? d.p : d.q);
            // aX steps then presses, Xa presses then steps. For inverse letters
            // the order flips: (aX)^-1 = X^-1 a presses before stepping.
            const bool arrive = after[i] != 0;
            const bool depart = before[i] != 0;
            const bool press_then_step = sign > 0 ? depart : arrive;
            Base b;
            if (arrive && depart)
                b = along_s ? Base::asa : Base::ata;
            else if (arrive || depart)
                b = press_then_step ? (along_s ? Base::sa : Base::ta) : (along_s ? Base::as : Base::at);
            else
                b = along_s ? Base::s : Base::t;
            timeline.push_back({b, sign});
        }
        return {{timeline.rbegin(), timeline.rend()}, Alphabet::metric};
    }
};

namespace detail {

inline LampConfig s_axis_part(const LampConfig& lamps) {
    return lamps.filter([](GridPosition l) { return l.p < 0; });
}
inline LampConfig t_axis_part(const LampConfig& lamps) {
    return lamps.filter([](GridPosition l) { return l.p == 0; });
}

inline void t_axis_sweep_case(const Element& g, std::int64_t n, Walk& w) {
    w.go({-n, 0});
    w.go({0, 0});
    w.press_all(s_axis_part(g.lamps));
    w.go({0, n});
    w.go({0, -n});
    w.go({0, g.pos.q});
    w.go(g.pos);
    w.press_all(t_axis_part(g.lamps));
}

inline void trapezoid_case(const Element& g, std::int64_t n, Walk& w) {
    const std::int64_t p = g.pos.p;
    const std::int64_t q = g.pos.q;
    w.go({-n, 0});
    w.go({0, 0});
    w.press_all(s_axis_part(g.lamps));

    w.go({0, -n});
    w.go({0, -p});
    w.go({p, -p});
    w.go({p, n - p});
    w.go({p, q});

    // Lamps below the trapezoid are pressed directly on the way back up.
    w.press_all(g.lamps.filter([&](GridPosition l) { return l.p == 0 && l.q < -p; }));

    std::vector<std::uint8_t> window;
    for (std::int64_t j = -p; j <= n; ++j) window.push_back(g.lamps.contains({0, j}) ? 1 : 0);
    auto sol = trapezoid_summits(window, static_cast<int>(p + 1));
    for (auto v : sol.press_positions({0, -p})) w.press(v);
}

/// Shared shape of the two p < 0 cases: `far` is the row (q = -n or q = n)
/// walked to light the s-axis; `near` is the t-axis end walked first.
inline void s_axis_arc_case(const Element& g, std::int64_t n, std::int64_t near, std::int64_t far,
                            Walk& w) {
    w.go({0, near});
    w.go({0, 0});
    w.go({0, far});
    w.go({-n, far});
    w.go(g.pos);

    std::vector<GridPosition> segment, arc;
    for (std::int64_t i = -1; i >= -n; --i) {
        segment.push_back({i, 0});
        arc.push_back({i, far});
    }
    auto presses = arc_press_solve(segment, s_axis_part(g.lamps), arc);
    LampConfig spill;
    for (auto v : presses) {
        spill.toggle(press_effect(v));
        w.press(v);
    }
    if (s_axis_part(spill) != s_axis_part(g.lamps))
        throw witness_error("s-axis presses did not reproduce the s-axis lamps");
    // Whatever the arc spilled onto the t-axis is undone on the t-axis legs.
    w.press_all(t_axis_part(g.lamps) ^ t_axis_part(spill));
}

}  // namespace detail

/// The walk behind witness_word.
inline Walk witness_walk(const Element& g) {
    const std::int64_t n = hex_param(g);
    Walk w;
    if (n == 0) {
        // identity or a itself
        w.press_all(g.lamps);
        return w;
    }
    if (g.pos.p >= 0) {
        if (in_T(g.pos, n))
            detail::t_axis_sweep_case(g, n, w);
        else
            detail::trapezoid_case(g, n, w);
    } else if (g.pos.q <= 0) {
        detail::s_axis_arc_case(g, n, n, -n, w);
    } else {
        detail::s_axis_arc_case(g, n, -n, n, w);
    }
    return w;
}

/// A word over A and its inverses evaluating to g, of length at most
/// 6 * hex_param(g) (length 1 for g = a, the one element with hex_param 0
/// other than the identity).
inline Word witness_word(const Element& g) {
    Word word = witness_walk(g).to_word();
    if (eval(word) != g) throw witness_error("witness walk does not replay to the element");
    return word;
}

}  // namespace lampgrid
