#pragma once

// Group elements as states of the lamplighter grid.
//
// The action of G on (lamp sets) x Z^2 is regular, so an element g is
// identified with g(empty, (0,0)): the lamps it leaves lit and where it
// leaves the lamplighter. Words act from the right-most letter first.

#include <functional>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lampgrid/grid.hpp"
#include "lampgrid/press.hpp"

namespace lampgrid {

struct Element {
    LampConfig lamps;
    GridPosition pos;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element& a, const Element& b) {
        if (auto c = a.pos <=> b.pos; c != 0) return c;
        return a.lamps <=> b.lamps;
    }

    friend std::ostream& operator<<(std::ostream& os, const Element& g) {
        return os << '(' << g.lamps << ',' << g.pos << ')';
    }
};

struct ElementHash {
    std::size_t operator()(const Element& g) const noexcept {
        return g.lamps.hash() * 31 + GridPositionHash{}(g.pos);
    }
};

/// The presentation generators a, s, t.
enum class Generator : std::uint8_t { a, s, t };

inline Element identity() { return {}; }

/// Applies a^{+-1}, s^{+-1} or t^{+-1} to a state. a is an involution, so its
/// sign is ignored.
inline Element& act(Generator gen, int sign, Element& state) {
    switch (gen) {
        case Generator::a: state.lamps.toggle(press_effect(state.pos)); break;
        case Generator::s: state.pos = state.pos + GridPosition{sign, 0}; break;
        case Generator::t: state.pos = state.pos + GridPosition{0, sign}; break;
    }
    return state;
}

inline Element apply_letter(Generator gen, int sign, Element state) {
    act(gen, sign, state);
    return state;
}

/// Lamps lit when the pattern `lamps` is pressed out relative to `origin`:
/// the xor of press_effect(origin + l) over l in lamps.
inline LampConfig translate_lamps(const LampConfig& lamps, GridPosition origin) {
    if (origin == GridPosition{}) return lamps;
    LampConfig out;
    for (auto l : lamps) out.toggle(press_effect(origin + l));
    return out;
}

/// The product g*h, in which h acts first. Equals eval(uv) when u spells g
/// and v spells h.
inline Element multiply(const Element& g, const Element& h) {
    Element out{h.lamps, h.pos + g.pos};
    out.lamps.toggle(translate_lamps(g.lamps, h.pos));
    return out;
}

inline Element inverse(const Element& g) {
    GridPosition back = -g.pos;
    return {translate_lamps(g.lamps, back), back};
}

// JSON: {"lamps": [[p,q], ...] in lexicographic order, "pos": [p,q]}

inline nlohmann::json to_json_value(GridPosition g) { return nlohmann::json::array({g.p, g.q}); }

inline nlohmann::json to_json_value(const Element& g) {
    auto lamps = nlohmann::json::array();
    for (auto l : g.lamps) lamps.push_back(to_json_value(l));
    return {{"lamps", std::move(lamps)}, {"pos", to_json_value(g.pos)}};
}

class element_load_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline GridPosition position_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw element_load_error("expected [p,q] integer pair, got " + j.dump());
    try {
        return {checked_coordinate(j[0].get<std::int64_t>()),
                checked_coordinate(j[1].get<std::int64_t>())};
    } catch (const coordinate_overflow& e) {
        throw element_load_error(e.what());
    }
}

inline Element element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lamps") || !j.contains("pos") || !j["lamps"].is_array())
        throw element_load_error("element must be an object with \"lamps\" and \"pos\"");
    std::vector<GridPosition> lamps;
    for (const auto& l : j["lamps"]) {
        auto g = position_from_json(l);
        if (!is_lampstand(g))
            throw element_load_error("lamp " + l.dump() + " is not on the lampstand");
        lamps.push_back(g);
    }
    std::vector<GridPosition> sorted = lamps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw element_load_error("duplicate lamp in element");
    return {LampConfig::from_toggles(std::move(lamps)), position_from_json(j["pos"])};
}

}  // namespace lampgrid
