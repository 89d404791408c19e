#pragma once

// Lattice positions of the rhombic grid and finite sets of lit lamps.
//
// A position (p, q) has p as its s-coordinate and q as its t-coordinate.
// The lampstand is the whole t-axis together with the strictly negative
// half of the s-axis; lamps only ever live there.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lampgrid {

/// Coordinates are kept within +-2^31; anything larger is rejected.
inline constexpr std::int64_t coordinate_limit = std::int64_t{1} << 31;

class coordinate_overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline std::int64_t checked_coordinate(std::int64_t v) {
    if (v > coordinate_limit || v < -coordinate_limit)
        throw coordinate_overflow("grid coordinate out of range: " + std::to_string(v));
    return v;
}

struct GridPosition {
    std::int64_t p = 0;
    std::int64_t q = 0;

    friend constexpr auto operator<=>(const GridPosition&, const GridPosition&) = default;

    friend GridPosition operator+(GridPosition a, GridPosition b) {
        return {checked_coordinate(a.p + b.p), checked_coordinate(a.q + b.q)};
    }
    friend GridPosition operator-(GridPosition a, GridPosition b) {
        return {checked_coordinate(a.p - b.p), checked_coordinate(a.q - b.q)};
    }
    friend GridPosition operator-(GridPosition a) { return {-a.p, -a.q}; }

    friend std::ostream& operator<<(std::ostream& os, GridPosition g) {
        return os << '(' << g.p << ',' << g.q << ')';
    }
};

struct GridPositionHash {
    std::size_t operator()(GridPosition g) const noexcept {
        auto h = static_cast<std::uint64_t>(g.p) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(g.q) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

constexpr bool is_lampstand(GridPosition g) noexcept {
    return g.p == 0 || (g.q == 0 && g.p < 0);
}

/// A finite set of lampstand points, kept sorted lexicographically by (p, q).
///
/// Lexicographic order lists the negative s-axis from its most negative
/// point towards -1 and then the t-axis in increasing order, which is the
/// canonical lamp order used for hashing, serialization and word synthesis.
class LampConfig {
public:
    LampConfig() = default;

    /// Builds a set from arbitrary points; repeated points cancel in pairs.
    static LampConfig from_toggles(std::vector<GridPosition> points) {
        std::sort(points.begin(), points.end());
        LampConfig out;
        for (std::size_t i = 0; i < points.size();) {
            std::size_t j = i;
            while (j < points.size() && points[j] == points[i]) ++j;
            if ((j - i) % 2 == 1) out.lamps_.push_back(points[i]);
            i = j;
        }
        out.validate();
        return out;
    }

    LampConfig(std::initializer_list<GridPosition> points)
        : LampConfig(from_toggles(std::vector<GridPosition>(points))) {}

    std::span<const GridPosition> lamps() const noexcept { return lamps_; }
    auto begin() const noexcept { return lamps_.begin(); }
    auto end() const noexcept { return lamps_.end(); }
    std::size_t size() const noexcept { return lamps_.size(); }
    bool empty() const noexcept { return lamps_.empty(); }

    bool contains(GridPosition g) const {
        return std::binary_search(lamps_.begin(), lamps_.end(), g);
    }

    /// In-place symmetric difference.
    LampConfig& toggle(const LampConfig& other) {
        if (other.empty()) return *this;
        std::vector<GridPosition> merged;
        merged.reserve(lamps_.size() + other.lamps_.size());
        std::set_symmetric_difference(lamps_.begin(), lamps_.end(), other.lamps_.begin(),
                                      other.lamps_.end(), std::back_inserter(merged));
        lamps_ = std::move(merged);
        return *this;
    }

    friend LampConfig operator^(LampConfig a, const LampConfig& b) { return a.toggle(b); }

    template <class Pred>
    LampConfig filter(Pred&& keep) const {
        LampConfig out;
        std::copy_if(lamps_.begin(), lamps_.end(), std::back_inserter(out.lamps_), keep);
        return out;
    }

    friend bool operator==(const LampConfig&, const LampConfig&) = default;
    friend auto operator<=>(const LampConfig& a, const LampConfig& b) {
        return std::lexicographical_compare_three_way(a.lamps_.begin(), a.lamps_.end(),
                                                      b.lamps_.begin(), b.lamps_.end());
    }

    std::size_t hash() const noexcept {
        std::size_t h = lamps_.size();
        for (auto g : lamps_) h = h * 0x100000001B3ULL ^ GridPositionHash{}(g);
        return h;
    }

    friend std::ostream& operator<<(std::ostream& os, const LampConfig& c) {
        os << '{';
        for (std::size_t i = 0; i < c.lamps_.size(); ++i) os << (i ? "," : "") << c.lamps_[i];
        return os << '}';
    }

private:
    void validate() const {
        for (auto g : lamps_)
            if (!is_lampstand(g)) {
                throw std::invalid_argument("lamp off the lampstand at (" + std::to_string(g.p) +
                                            "," + std::to_string(g.q) + ")");
            }
    }

    std::vector<GridPosition> lamps_;
};

}  // namespace lampgrid
