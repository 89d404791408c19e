#pragma once

// Breadth-first search in the Cayley graph of (G, A).
//
// Neighbours of a state are obtained by applying one of the 17 distinct
// moves of A and its inverses (a is its own inverse), i.e. by letting the
// lamplighter continue its walk. States are hashed canonically, so every
// element is stored once, at its first depth.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lampgrid/element.hpp"
#include "lampgrid/words.hpp"

namespace lampgrid {

struct SearchLimits {
    std::size_t memory_limit_bytes = std::size_t{2} << 30;
};

class memory_cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One move of A and its inverses, pre-expanded into generator actions in
/// the order they are applied.
struct Move {
    Letter letter;
    std::array<std::pair<Generator, int>, 3> ops{};
    int count = 0;

    void apply(Element& state) const {
        for (int i = 0; i < count; ++i) act(ops[i].first, ops[i].second, state);
    }
};

inline const std::vector<Move>& metric_moves() {
    static const std::vector<Move> moves = [] {
        std::vector<Move> out;
        for (auto b : all_bases)
            for (int sign : {1, -1}) {
                if (b == Base::a && sign < 0) continue;
                Move m{{b, sign}};
                auto seq = expand_letter(m.letter);
                for (auto it = seq.rbegin(); it != seq.rend(); ++it) m.ops[m.count++] = *it;
                out.push_back(m);
            }
        return out;
    }();
    return moves;
}

namespace detail {

inline std::size_t approx_bytes(const Element& e) {
    // hash node + bucket + lamp storage + layer slot
    return sizeof(Element) + 64 + e.lamps.size() * sizeof(GridPosition);
}

inline void check_budget(std::size_t used, const SearchLimits& limits) {
    if (used > limits.memory_limit_bytes)
        throw memory_cap_exceeded("search exceeded the memory cap of " +
                                  std::to_string(limits.memory_limit_bytes >> 20) + " MiB");
}

}  // namespace detail

/// The closed ball B(1, radius), layer by layer.
class Ball {
public:
    struct Node {
        int depth = 0;
        int last_move = -1;  // index into metric_moves(); -1 for the identity
    };

    Ball(int radius, const SearchLimits& limits = {}) {
        if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
        const auto& moves = metric_moves();
        std::size_t used = 0;
        auto [root, ok] = nodes_.emplace(identity(), Node{});
        layers_.push_back({&root->first});
        used += detail::approx_bytes(root->first);
        for (int d = 0; d < radius; ++d) {
            std::vector<const Element*> next;
            for (const Element* e : layers_.back())
                for (std::size_t m = 0; m < moves.size(); ++m) {
                    Element n = *e;
                    moves[m].apply(n);
                    auto [it, inserted] =
                        nodes_.try_emplace(std::move(n), Node{d + 1, static_cast<int>(m)});
                    if (!inserted) continue;
                    next.push_back(&it->first);
                    used += detail::approx_bytes(it->first);
                    detail::check_budget(used, limits);
                }
            layers_.push_back(std::move(next));
        }
    }

    int radius() const noexcept { return static_cast<int>(layers_.size()) - 1; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<std::vector<const Element*>>& layers() const noexcept { return layers_; }

    std::optional<int> depth(const Element& g) const {
        auto it = nodes_.find(g);
        if (it == nodes_.end()) return std::nullopt;
        return it->second.depth;
    }

    /// A geodesic word for a member of the ball, read off the BFS tree.
    Word word_for(const Element& g) const {
        Word w{{}, Alphabet::metric};
        Element cur = g;
        for (;;) {
            auto it = nodes_.find(cur);
            if (it == nodes_.end()) throw std::out_of_range("element is not in the ball");
            if (it->second.last_move < 0) break;
            const Letter l = metric_moves()[static_cast<std::size_t>(it->second.last_move)].letter;
            w.letters.push_back(l);
            act(Letter{l.base, l.base == Base::a ? 1 : -l.sign}, cur);
        }
        return w;
    }

private:
    std::unordered_map<Element, Node, ElementHash> nodes_;
    std::vector<std::vector<const Element*>> layers_;
};

struct DistanceResult {
    /// d(1, g) when it is at most the search radius.
    std::optional<int> distance;
    /// Radius searched; without a distance, d(1, g) > searched_radius.
    int searched_radius = 0;
};

/// d(1, g) by bidirectional breadth-first search, exact up to max_radius.
inline DistanceResult exact_distance(const Element& g, int max_radius,
                                     const SearchLimits& limits = {}) {
    if (g == identity()) return {0, 0};
    const auto& moves = metric_moves();
    using Map = std::unordered_map<Element, int, ElementHash>;
    Map side[2];
    std::vector<Element> frontier[2];
    int radius[2] = {0, 0};
    side[0].emplace(identity(), 0);
    side[1].emplace(g, 0);
    frontier[0] = {identity()};
    frontier[1] = {g};
    std::size_t used = 0;

    while (radius[0] + radius[1] < max_radius) {
        // Grow the smaller frontier by one full layer.
        const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        if (frontier[s].empty()) break;
        std::vector<Element> next;
        std::optional<int> best;
        for (const auto& e : frontier[s])
            for (const auto& m : moves) {
                Element n = e;
                m.apply(n);
                auto [it, inserted] = side[s].try_emplace(n, radius[s] + 1);
                if (!inserted) continue;
                used += detail::approx_bytes(n);
                detail::check_budget(used, limits);
                if (auto o = side[1 - s].find(n); o != side[1 - s].end()) {
                    int total = radius[s] + 1 + o->second;
                    if (!best || total < *best) best = total;
                }
                next.push_back(std::move(n));
            }
        ++radius[s];
        frontier[s] = std::move(next);
        if (best && *best <= max_radius) return {best, radius[0] + radius[1]};
    }
    return {std::nullopt, radius[0] + radius[1]};
}

/// |S(0)|, ..., |S(r_max)| about the identity.
inline std::vector<std::size_t> sphere_sizes(int r_max, const SearchLimits& limits = {}) {
    Ball ball(r_max, limits);
    std::vector<std::size_t> out;
    for (const auto& layer : ball.layers()) out.push_back(layer.size());
    return out;
}

}  // namespace lampgrid
