#pragma once

// The invariant suites of every module, runnable from the command line.

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lampgrid/lampgrid.hpp"

namespace lampgrid {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

struct SuiteFailure {
    std::string what;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw SuiteFailure{what};
}

inline Word random_metric_word(std::mt19937_64& rng, std::size_t max_len) {
    Word w{{}, Alphabet::metric};
    for (std::size_t i = rng() % (max_len + 1); i > 0; --i)
        w.letters.push_back({all_bases[rng() % all_bases.size()], rng() & 1 ? 1 : -1});
    return w;
}

inline Element act_word(const Word& w, Element x) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) act(*it, x);
    return x;
}

inline std::vector<Word> relator_words() {
    return {parse("a a", Alphabet::presentation), parse("a^-1 t^-1 a^-1 t a t^-1 a t", Alphabet::presentation),
            parse("s^-1 t^-1 s t", Alphabet::presentation),
            parse("s^-1 a s t^-1 a^-1 t a^-1", Alphabet::presentation)};
}

}  // namespace detail

inline std::vector<SuiteResult> run_selftest(std::uint64_t seed = 1) {
    using detail::require;
    std::vector<std::pair<std::string, std::function<std::string()>>> suites;

    suites.emplace_back("relators", [seed] {
        std::mt19937_64 rng(seed);
        const auto rels = detail::relator_words();
        for (int i = 0; i < 1000; ++i) {
            const Element x = i % 2 ? eval(detail::random_metric_word(rng, 40))
                                    : random_element(1 + static_cast<std::int64_t>(rng() % 12), rng());
            for (const auto& r : rels) require(detail::act_word(r, x) == x, "relator " + format(r) + " moved a state");
        }
        return std::string("4 relators on 1000 states");
    });

    suites.emplace_back("press-bilinearity", [] {
        for (std::int64_t p = -12; p <= 12; ++p)
            for (std::int64_t q = -12; q <= 12; ++q)
                require(press_effect({p + 1, q}) == (press_effect({p, q}) ^ press_effect({p, q + 1})),
                        "bilinearity fails");
        return std::string("|p|,|q| <= 12");
    });

    suites.emplace_back("pascal-rows", [] {
        std::vector<std::uint8_t> row{1};
        for (std::int64_t p = 0; p <= 16; ++p) {
            for (std::int64_t q = -8; q <= 8; ++q) {
                std::vector<GridPosition> want;
                for (std::size_t r = 0; r < row.size(); ++r)
                    if (row[r]) want.push_back({0, q + static_cast<std::int64_t>(r)});
                require(press_effect({p, q}) == LampConfig::from_toggles(want), "row " + std::to_string(p));
            }
            std::vector<std::uint8_t> next(row.size() + 1, 0);
            for (std::size_t r = 0; r < row.size(); ++r) {
                next[r] ^= row[r];
                next[r + 1] ^= row[r];
            }
            row = std::move(next);
        }
        return std::string("rows 0..16");
    });

    suites.emplace_back("hexagon-containment", [] {
        for (std::int64_t n = 0; n <= 12; ++n)
            for (std::int64_t p = -n; p <= n; ++p)
                for (std::int64_t q = -n; q <= n; ++q)
                    if (in_hexagon({p, q}, n))
                        for (auto l : press_effect({p, q})) require(in_hexagon(l, n), "press leaves H_n");
        return std::string("n <= 12");
    });

    suites.emplace_back("group-laws", [seed] {
        std::mt19937_64 rng(seed + 1);
        for (int i = 0; i < 500; ++i) {
            auto u = detail::random_metric_word(rng, 40), v = detail::random_metric_word(rng, 40);
            require(eval(concat(u, v)) == multiply(eval(u), eval(v)), "multiply disagrees with concatenation");
            require(multiply(eval(u), inverse(eval(u))) == identity(), "inverse fails");
            require(eval(canonical_word(eval(u))) == eval(u), "canonical word fails");
            require(parse(format(u), Alphabet::metric) == u, "format/parse round trip fails");
            require(eval(to_presentation(u)) == eval(u), "compound expansion fails");
        }
        for (int i = -5; i <= -1; ++i)
            for (int j = -5; j <= 5; ++j) {
                Element x{LampConfig{{i, 0}}, {}}, y{LampConfig{{0, j}}, {}};
                require(multiply(x, y) == multiply(y, x), "conjugates of a fail to commute");
            }
        return std::string("500 word pairs");
    });

    suites.emplace_back("trapezoid", [] {
        for (int m = 1; m <= 10; ++m)
            for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
                std::vector<std::uint8_t> bits(m);
                std::vector<GridPosition> want;
                for (int j = 0; j < m; ++j) {
                    bits[j] = (mask >> j) & 1;
                    if (bits[j]) want.push_back({0, j});
                }
                for (int r = 1; r <= m; ++r) {
                    LampConfig lit;
                    for (auto v : trapezoid_summits(bits, r).press_positions({0, 0})) lit.toggle(press_effect(v));
                    require(lit == LampConfig::from_toggles(want), "summit presses miss the base");
                }
            }
        return std::string("m <= 10, all r");
    });

    suites.emplace_back("witness", [seed] {
        std::mt19937_64 rng(seed + 2);
        for (int i = 0; i < 500; ++i) {
            const auto g = random_element(1 + static_cast<std::int64_t>(rng() % 25), rng());
            const auto w = witness_word(g);
            require(eval(w) == g && static_cast<std::int64_t>(a_length(w)) <= 6 * hex_param(g), "random witness");
        }
        Ball ball(4);
        for (const auto& layer : ball.layers())
            for (const Element* g : layer) {
                const auto len = static_cast<std::int64_t>(a_length(witness_word(*g)));
                require(len >= *ball.depth(*g), "witness shorter than a geodesic");
                require(len <= std::max<std::int64_t>(6 * hex_param(*g), 1), "witness too long");
            }
        return "500 random + " + std::to_string(ball.size()) + " ball elements";
    });

    suites.emplace_back("gn-distance", [] {
        for (std::int64_t n = 1; n <= 50; ++n) {
            require(tour_lower_bound(n) == 6 * n, "tour bound");
            const auto [g, w] = make_gn(n);
            require(eval(w) == g && static_cast<std::int64_t>(a_length(w)) == 6 * n, "g_n word");
        }
        require(exact_distance(make_gn(1).first, 6).distance == 6, "d(1, g_1)");
        return std::string("n <= 50, exact at n = 1");
    });

    suites.emplace_back("depth", [] {
        for (std::int64_t n = 1; n <= 4; ++n)
            require(certify_depth(n, static_cast<int>(n)).certified, "certify_depth(" + std::to_string(n) + ")");
        return std::string("certified for n = 1..4");
    });

    suites.emplace_back("bfs-canonical", [] {
        Ball ball(5);
        std::map<Element, std::size_t> seen;
        for (std::size_t d = 0; d < ball.layers().size(); ++d)
            for (const Element* g : ball.layers()[d]) require(seen.emplace(*g, d).second, "element at two depths");
        require(ball.layers()[1].size() == 17, "|S(1)| != 17");
        return std::to_string(ball.size()) + " elements";
    });

    std::vector<SuiteResult> results;
    for (auto& [name, body] : suites) {
        SuiteResult r;
        r.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.passed = true;
        } catch (const detail::SuiteFailure& f) {
            r.detail = f.what;
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace lampgrid
