#pragma once

// Words over the presentation alphabet {a, s, t} and over the metric
// alphabet A = {a, s, t, at, ta, ata, as, sa, asa}.
//
// Token grammar: whitespace separated `base` or `base^k`; k < 0 stands for
// |k| inverse letters and k = 0 for nothing. Presentation words may also be
// written compactly, e.g. "sAt", with upper case letters as inverses.
//
// A compound base is the written product of its constituents, so "at" is a
// followed by t: under right-to-left action the lamplighter first steps in t
// and then presses. Inverse compound letters expand to the reversed,
// inverted constituents.

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lampgrid/element.hpp"
#include "lampgrid/hexagon.hpp"

namespace lampgrid {

enum class Base : std::uint8_t { a, s, t, at, ta, ata, as, sa, asa };

inline constexpr std::array<Base, 9> all_bases = {Base::a,   Base::s,  Base::t,  Base::at, Base::ta,
                                                  Base::ata, Base::as, Base::sa, Base::asa};

enum class Alphabet : std::uint8_t { presentation, metric };

struct Letter {
    Base base = Base::a;
    int sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
    std::vector<Letter> letters;
    Alphabet alphabet = Alphabet::metric;

    friend bool operator==(const Word&, const Word&) = default;
};

class word_parse_error : public std::invalid_argument {
public:
    explicit word_parse_error(const std::string& token, const std::string& why)
        : std::invalid_argument(why + ": '" + token + "'"), token_(token) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

constexpr std::string_view base_name(Base b) noexcept {
    constexpr std::array<std::string_view, 9> names = {"a",   "s",  "t",  "at", "ta",
                                                       "ata", "as", "sa", "asa"};
    return names[static_cast<std::size_t>(b)];
}

inline std::optional<Base> base_from_name(std::string_view name) {
    for (auto b : all_bases)
        if (base_name(b) == name) return b;
    return std::nullopt;
}

constexpr bool is_presentation_base(Base b) noexcept {
    return b == Base::a || b == Base::s || b == Base::t;
}

/// Constituent generators of a base as written, left to right.
inline std::vector<Generator> constituents(Base b) {
    std::vector<Generator> out;
    for (char c : base_name(b)) out.push_back(c == 'a' ? Generator::a : c == 's' ? Generator::s : Generator::t);
    return out;
}

namespace detail {

inline void push_run(Word& w, Base base, long long k) {
    Letter l{base, k < 0 ? -1 : 1};
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) w.letters.push_back(l);
}

inline bool parse_compact(std::string_view token, Word& w) {
    std::vector<Letter> out;
    for (char c : token) {
        switch (c) {
            case 'a': out.push_back({Base::a, 1}); break;
            case 's': out.push_back({Base::s, 1}); break;
            case 't': out.push_back({Base::t, 1}); break;
            case 'A': out.push_back({Base::a, -1}); break;
            case 'S': out.push_back({Base::s, -1}); break;
            case 'T': out.push_back({Base::t, -1}); break;
            default: return false;
        }
    }
    w.letters.insert(w.letters.end(), out.begin(), out.end());
    return true;
}

}  // namespace detail

/// Longest accepted exponent; keeps expansions of run-length tokens sane.
inline constexpr long long max_exponent = 1LL << 31;

inline Word parse(std::string_view text, Alphabet alphabet) {
    Word w{{}, alphabet};
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        auto caret = token.find('^');
        std::string head = token.substr(0, caret);
        long long k = 1;
        if (caret != std::string::npos) {
            std::string_view exp = std::string_view(token).substr(caret + 1);
            if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), k);
            if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size() ||
                k > max_exponent || k < -max_exponent)
                throw word_parse_error(token, "malformed exponent");
        }
        auto base = base_from_name(head);
        if (base && (alphabet == Alphabet::metric || is_presentation_base(*base))) {
            detail::push_run(w, *base, k);
            continue;
        }
        if (alphabet == Alphabet::presentation && caret == std::string::npos) {
            if (detail::parse_compact(token, w)) continue;
            throw word_parse_error(token, "character outside {a,s,t,A,S,T} in compact word");
        }
        throw word_parse_error(token, "unknown base");
    }
    return w;
}

/// Token form with runs of equal letters compressed to base^k.
inline std::string format(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size();) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        long long k = static_cast<long long>(j - i) * w.letters[i].sign;
        if (!out.empty()) out += ' ';
        out += base_name(w.letters[i].base);
        if (k != 1) out += "^" + std::to_string(k);
        i = j;
    }
    return out;
}

/// Number of letters; each letter of A or its inverse costs one.
inline std::size_t a_length(const Word& w) { return w.letters.size(); }

/// Generator sequence of one letter as written, left to right.
inline std::vector<std::pair<Generator, int>> expand_letter(Letter l) {
    std::vector<std::pair<Generator, int>> out;
    for (auto g : constituents(l.base)) out.push_back({g, 1});
    if (l.sign < 0) {
        std::reverse(out.begin(), out.end());
        for (auto& [g, sign] : out) sign = -1;
    }
    return out;
}

/// Applies one letter to a state (the letter acts after the state's word).
inline Element& act(Letter l, Element& state) {
    auto seq = expand_letter(l);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) act(it->first, it->second, state);
    return state;
}

inline Element eval(const Word& w) {
    Element state;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) act(*it, state);
    return state;
}

/// Rewrites every compound letter into a, s, t letters.
inline Word to_presentation(const Word& w) {
    Word out{{}, Alphabet::presentation};
    for (auto l : w.letters)
        for (auto [g, sign] : expand_letter(l))
            out.letters.push_back({g == Generator::a ? Base::a : g == Generator::s ? Base::s : Base::t, sign});
    return out;
}

inline Word concat(const Word& u, const Word& v) {
    Word out{u.letters, u.alphabet == Alphabet::presentation && v.alphabet == Alphabet::presentation
                            ? Alphabet::presentation
                            : Alphabet::metric};
    out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
    return out;
}

inline Word inverse_word(const Word& w) {
    Word out{{w.letters.rbegin(), w.letters.rend()}, w.alphabet};
    for (auto& l : out.letters) l.sign = -l.sign;
    return out;
}

/// Deterministic presentation word for g: walk the lampstand pressing each lit
/// lamp in canonical order, then walk to g.pos. Every walk does its s-moves
/// before its t-moves.
inline Word canonical_word(const Element& g) {
    std::vector<Letter> timeline;
    GridPosition here{};
    auto walk_to = [&](GridPosition target) {
        for (; here.p != target.p; here.p += (target.p > here.p ? 1 : -1))
            timeline.push_back({Base::s, target.p > here.p ? 1 : -1});
        for (; here.q != target.q; here.q += (target.q > here.q ? 1 : -1))
            timeline.push_back({Base::t, target.q > here.q ? 1 : -1});
    };
    for (auto lamp : g.lamps) {
        walk_to(lamp);
        timeline.push_back({Base::a, 1});
    }
    walk_to(g.pos);
    return {{timeline.rbegin(), timeline.rend()}, Alphabet::presentation};
}

/// Deterministic test element with every lamp and the lamplighter in H_n.
/// Mixes uniform draws with corners of H_n, empty lamp sets, fully lit
/// lampstand segments and sparse lamp sets.
inline Element random_element(std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_element needs n >= 1");
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto random_pos = [&] {
        for (;;) {
            GridPosition g{uniform(-n, n), uniform(-n, n)};
            if (in_hexagon(g, n)) return g;
        }
    };
    const std::array<GridPosition, 6> corners = {
        GridPosition{n, 0}, {-n, 0}, {0, n}, {0, -n}, {n, -n}, {-n, n}};
    const auto stand = lampstand_in_hexagon(n);

    Element g;
    std::vector<GridPosition> lit;
    switch (rng() % 5) {
        case 0:
            for (auto l : stand) if (rng() & 1) lit.push_back(l);
            g.pos = random_pos();
            break;
        case 1:
            for (auto l : stand) if (rng() & 1) lit.push_back(l);
            g.pos = corners[rng() % corners.size()];
            break;
        case 2:
            g.pos = random_pos();
            break;
        case 3:
            lit = stand;
            g.pos = rng() & 1 ? random_pos() : corners[rng() % corners.size()];
            break;
        default:
            for (int i = uniform(1, 3); i > 0; --i) lit.push_back(stand[rng() % stand.size()]);
            // make sure the boundary of H_n is touched
            lit.push_back(std::array<GridPosition, 3>{GridPosition{-n, 0}, {0, n}, {0, -n}}[rng() % 3]);
            g.pos = random_pos();
            break;
    }
    g.lamps = LampConfig::from_toggles(std::move(lit));
    return g;
}

}  // namespace lampgrid
