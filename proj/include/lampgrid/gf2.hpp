#pragma once

// Linear algebra over GF(2) for choosing which buttons to press.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lampgrid/grid.hpp"
#include "lampgrid/press.hpp"

namespace lampgrid {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
    void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    void set(std::size_t i, bool v) noexcept {
        if (test(i) != v) flip(i);
    }
    BitVector& operator^=(const BitVector& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

class singular_system : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solves sum_j x_j * columns[j] == target. Requires full column rank and a
/// consistent right-hand side; otherwise throws singular_system.
inline std::vector<bool> solve_gf2(std::span<const BitVector> columns, const BitVector& target) {
    const std::size_t rows = target.size();
    const std::size_t cols = columns.size();
    // Augmented row-major matrix: one BitVector of width cols+1 per row.
    std::vector<BitVector> m(rows, BitVector(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("column height mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            if (columns[j].test(i)) m[i].flip(j);
    }
    for (std::size_t i = 0; i < rows; ++i)
        if (target.test(i)) m[i].flip(cols);

    std::vector<std::size_t> pivot_row(cols);
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        std::size_t piv = r;
        while (piv < rows && !m[piv].test(j)) ++piv;
        if (piv == rows)
            throw singular_system("press system is singular at column " + std::to_string(j));
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i].test(j)) m[i] ^= m[r];
        pivot_row[j] = r++;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i].test(cols)) throw singular_system("target pattern is not reachable from the arc");

    std::vector<bool> x(cols);
    for (std::size_t j = 0; j < cols; ++j) x[j] = m[pivot_row[j]].test(cols);
    return x;
}

/// Chooses presses along `arc` whose combined effect, restricted to the
/// lampstand `segment`, equals `target`. Lamps outside the segment are
/// ignored (callers account for those side effects separately).
inline std::vector<GridPosition> arc_press_solve(std::span<const GridPosition> segment,
                                                 const LampConfig& target,
                                                 std::span<const GridPosition> arc) {
    std::unordered_map<GridPosition, std::size_t, GridPositionHash> row_of;
    for (std::size_t i = 0; i < segment.size(); ++i) row_of.emplace(segment[i], i);

    BitVector rhs(segment.size());
    for (auto l : target) {
        auto it = row_of.find(l);
        if (it == row_of.end()) throw std::invalid_argument("target lamp outside the segment");
        rhs.flip(it->second);
    }

    std::vector<BitVector> columns;
    columns.reserve(arc.size());
    for (auto v : arc) {
        BitVector col(segment.size());
        for (auto l : press_effect(v))
            if (auto it = row_of.find(l); it != row_of.end()) col.flip(it->second);
        columns.push_back(std::move(col));
    }

    auto x = solve_gf2(columns, rhs);
    std::vector<GridPosition> presses;
    for (std::size_t j = 0; j < arc.size(); ++j)
        if (x[j]) presses.push_back(arc[j]);
    return presses;
}

}  // namespace lampgrid
