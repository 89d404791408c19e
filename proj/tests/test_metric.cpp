#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_support.hpp"

using namespace lampgrid;
using lampgrid::testing::replay_presses;
using lampgrid::testing::trapezoid_oracle;

namespace {

Element ev(std::string_view w) { return eval(parse(w, Alphabet::metric)); }

LampConfig base_lamps(const std::vector<std::uint8_t>& bits) {
    std::vector<GridPosition> lit;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) lit.push_back({0, static_cast<std::int64_t>(j)});
    return LampConfig::from_toggles(lit);
}

std::vector<Summit> sorted(std::vector<Summit> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(HexParam, Examples) {
    EXPECT_EQ(hex_param(identity()), 0);
    EXPECT_EQ(hex_param(make_gn(1).first), 1);
    EXPECT_EQ(hex_param(Element{{}, {2, -1}}), 2);
    EXPECT_EQ(hex_param(Element{{}, {2, 1}}), 3);
    EXPECT_EQ(hex_param(ev("a")), 0);
}

TEST(InT, Examples) {
    EXPECT_TRUE(in_T({0, 0}, 4));
    EXPECT_TRUE(in_T({4, -4}, 4));
    EXPECT_TRUE(in_T({0, -4}, 4));
    EXPECT_FALSE(in_T({1, 0}, 4));
    EXPECT_FALSE(in_T({-1, -1}, 4));
    EXPECT_FALSE(in_T({2, -5}, 4));
}

TEST(Trapezoid, Examples) {
    EXPECT_TRUE(trapezoid_summits({0, 0, 0, 0, 0}, 3).summits.empty());
    EXPECT_EQ(trapezoid_summits({1}, 1).summits, (std::vector<Summit>{{1, 1}}));

    const std::vector<std::uint8_t> s{1, 0, 1, 1};
    const auto sol = trapezoid_summits(s, 3);
    EXPECT_EQ(sorted(sol.summits), trapezoid_oracle(s, 3).value());
    EXPECT_EQ(replay_presses(sol.press_positions({0, 0})), base_lamps(s));
    ASSERT_EQ(sol.entries.size(), 3u);
    EXPECT_EQ(sol.entries[2].size(), 2u);
}

TEST(Trapezoid, RowsOutOfRange) {
    EXPECT_THROW(trapezoid_summits({1, 0}, 0), std::out_of_range);
    EXPECT_THROW(trapezoid_summits({1, 0}, 3), std::out_of_range);
    EXPECT_THROW(trapezoid_summits({}, 1), std::out_of_range);
}

TEST(Trapezoid, NonSummitsFollowThePascalRule) {
    const auto sol = trapezoid_summits({1, 1, 0, 1, 0, 0, 1, 1, 1}, 5);
    std::set<Summit> summits(sol.summits.begin(), sol.summits.end());
    for (std::size_t k = 0; k < sol.entries.size(); ++k)
        for (std::size_t i = 0; i < sol.entries[k].size(); ++i) {
            std::uint8_t above = 0;
            if (k + 1 < sol.entries.size()) {
                if (i >= 1) above ^= sol.entries[k + 1][i - 1];
                if (i < sol.entries[k + 1].size()) above ^= sol.entries[k + 1][i];
            }
            const bool summit = summits.contains({static_cast<int>(k) + 1, static_cast<int>(i) + 1});
            EXPECT_EQ(sol.entries[k][i] != above, summit) << k << "," << i;
        }
}

TEST(Trapezoid, ExhaustiveUpToEight) {
    for (int m = 1; m <= 8; ++m)
        for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
            std::vector<std::uint8_t> bits(m);
            for (int j = 0; j < m; ++j) bits[j] = (mask >> j) & 1;
            for (int r = 1; r <= m; ++r) {
                const auto sol = trapezoid_summits(bits, r);
                ASSERT_EQ(sorted(sol.summits), trapezoid_oracle(bits, r).value());
                std::vector<GridPosition> shifted;
                for (int j = 0; j < m; ++j)
                    if (bits[j]) shifted.push_back({0, j + 3});
                ASSERT_EQ(replay_presses(sol.press_positions({0, 3})), LampConfig::from_toggles(shifted));
            }
        }
}

TEST(ArcPressSolve, Examples) {
    const std::vector<GridPosition> segment{{-2, 0}, {-1, 0}};
    const std::vector<GridPosition> arc{{-1, -2}, {-2, -2}};
    EXPECT_TRUE(arc_press_solve(segment, {}, arc).empty());
    EXPECT_EQ(arc_press_solve(segment, LampConfig{{-1, 0}}, arc), (std::vector<GridPosition>{{-1, -2}}));
    EXPECT_EQ(arc_press_solve(segment, LampConfig{{-2, 0}}, arc), (std::vector<GridPosition>{{-2, -2}}));
}

TEST(ArcPressSolve, ReplayReproducesEveryTargetOnTheSegment) {
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t far : {-n, n}) {
            std::vector<GridPosition> segment, arc;
            for (std::int64_t i = -1; i >= -n; --i) {
                segment.push_back({i, 0});
                arc.push_back({i, far});
            }
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                std::vector<GridPosition> want;
                for (std::int64_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1) want.push_back(segment[i]);
                const auto target = LampConfig::from_toggles(want);
                const auto presses = arc_press_solve(segment, target, arc);
                const auto lit = replay_presses(presses).filter([](GridPosition l) { return l.p < 0; });
                ASSERT_EQ(lit, target);
            }
        }
}

TEST(ArcPressSolve, SingularSystemsAreReported) {
    const std::vector<GridPosition> segment{{-2, 0}, {-1, 0}};
    // (0,-2) never reaches the s-axis.
    EXPECT_THROW(arc_press_solve(segment, LampConfig{{-1, 0}}, std::vector<GridPosition>{{0, -2}, {-2, -2}}),
                 singular_system);
    EXPECT_THROW(arc_press_solve(segment, LampConfig{{-3, 0}}, std::vector<GridPosition>{{-1, -2}, {-2, -2}}),
                 std::invalid_argument);
}

TEST(Gf2, SolvesAndDetectsInconsistency) {
    BitVector c0(3), c1(3), rhs(3);
    c0.flip(0);
    c0.flip(1);
    c1.flip(1);
    rhs.flip(0);
    const std::vector<BitVector> cols{c0, c1};
    EXPECT_EQ(solve_gf2(cols, rhs), (std::vector<bool>{true, true}));
    rhs.flip(2);
    EXPECT_THROW(solve_gf2(cols, rhs), singular_system);
}

TEST(Witness, Examples) {
    EXPECT_TRUE(witness_word(identity()).letters.empty());
    EXPECT_EQ(format(witness_word(ev("a"))), "a");
    const auto [g1, w1] = make_gn(1);
    EXPECT_EQ(a_length(witness_word(g1)), 6u);
}

TEST(Witness, EachCaseOfThePathConstruction) {
    // One position per case, with lamps everywhere on the lampstand of H_6.
    const std::int64_t n = 6;
    for (GridPosition pos : {GridPosition{2, -4}, {0, -6}, {3, 2}, {0, 6}, {6, -6}, {6, 0},
                             {-3, -2}, {-6, 0}, {-2, 5}, {-6, 6}}) {
        for (int variant = 0; variant < 3; ++variant) {
            std::vector<GridPosition> lit;
            for (auto l : lampstand_in_hexagon(n))
                if (variant == 0 || (variant == 1 && (l.p + l.q) % 2 == 0)) lit.push_back(l);
            Element g{LampConfig::from_toggles(lit), pos};
            const auto w = witness_word(g);
            ASSERT_EQ(eval(w), g) << pos;
            ASSERT_LE(a_length(w), static_cast<std::size_t>(6 * hex_param(g))) << pos;
        }
    }
}

TEST(Witness, RandomElements) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const auto n = 1 + static_cast<std::int64_t>(rng() % 25);
        const auto g = random_element(n, rng());
        const auto w = witness_word(g);
        ASSERT_EQ(eval(w), g);
        ASSERT_LE(a_length(w), static_cast<std::size_t>(6 * hex_param(g)));
    }
}

TEST(Witness, NeverShorterThanTheExactDistance) {
    Ball ball(4);
    for (const auto& layer : ball.layers())
        for (const Element* g : layer) {
            const auto w = witness_word(*g);
            ASSERT_EQ(eval(w), *g);
            ASSERT_GE(a_length(w), static_cast<std::size_t>(*ball.depth(*g)));
            if (*g != ev("a")) {
                ASSERT_LE(a_length(w), static_cast<std::size_t>(6 * hex_param(*g)));
            }
        }
}

TEST(Tour, Values) {
    EXPECT_EQ(tour_lower_bound(0), 0);
    EXPECT_EQ(tour_lower_bound(1), 6);
    EXPECT_EQ(tour_lower_bound(3), 18);
    for (std::int64_t n = 1; n <= 20; ++n) EXPECT_EQ(tour_lower_bound(n), 6 * n);
    EXPECT_THROW(tour_lower_bound(-1), std::invalid_argument);
}

TEST(ExactDistance, Examples) {
    EXPECT_EQ(exact_distance(identity(), 5).distance, 0);
    EXPECT_EQ(exact_distance(ev("at"), 5).distance, 1);
    EXPECT_EQ(exact_distance(make_gn(1).first, 6).distance, 6);
    const auto capped = exact_distance(make_gn(1).first, 5);
    EXPECT_FALSE(capped.distance);
    EXPECT_GE(capped.searched_radius, 5);
}

TEST(ExactDistance, AgreesWithBallDepths) {
    Ball ball(4);
    std::mt19937_64 rng(1);
    for (const auto& layer : ball.layers())
        for (const Element* g : layer)
            if (rng() % 7 == 0) {
                ASSERT_EQ(exact_distance(*g, 8).distance, ball.depth(*g));
            }
}

TEST(ExactDistance, GnUnconditionallyForSmallN) {
    // Beyond the tour argument: exhaustive search settles |g_n| for n <= 3.
    for (std::int64_t n = 1; n <= 3; ++n)
        EXPECT_EQ(exact_distance(make_gn(n).first, static_cast<int>(6 * n)).distance, 6 * n) << n;
}

TEST(ExactDistance, MemoryCap) {
    SearchLimits tiny{1024};
    EXPECT_THROW(exact_distance(make_gn(2).first, 12, tiny), memory_cap_exceeded);
    EXPECT_THROW(sphere_sizes(4, tiny), memory_cap_exceeded);
}

TEST(Spheres, Counts) {
    EXPECT_EQ(sphere_sizes(0), (std::vector<std::size_t>{1}));
    EXPECT_EQ(sphere_sizes(1), (std::vector<std::size_t>{1, 17}));
    const auto sizes = sphere_sizes(5);
    for (std::size_t r = 1; r < sizes.size(); ++r) EXPECT_GT(sizes[r], sizes[r - 1]);
}

TEST(Spheres, FirstSphereIsTheDistinctMoves) {
    std::set<Element> moves;
    for (auto b : all_bases)
        for (int sign : {1, -1}) moves.insert(eval(Word{{{b, sign}}, Alphabet::metric}));
    EXPECT_EQ(moves.size(), 17u);
    EXPECT_FALSE(moves.contains(identity()));
}

TEST(Spheres, NoElementAtTwoDepths) {
    Ball ball(5);
    std::map<Element, std::size_t> seen;
    for (std::size_t d = 0; d < ball.layers().size(); ++d)
        for (const Element* g : ball.layers()[d]) ASSERT_TRUE(seen.emplace(*g, d).second);
    EXPECT_EQ(seen.size(), ball.size());
}

TEST(Ball, WordsReadOffTheTreeAreGeodesic) {
    Ball ball(3);
    for (const auto& layer : ball.layers())
        for (const Element* g : layer) {
            const auto w = ball.word_for(*g);
            ASSERT_EQ(eval(w), *g);
            ASSERT_EQ(static_cast<int>(a_length(w)), *ball.depth(*g));
        }
}

TEST(Gn, Construction) {
    const auto [g1, w1] = make_gn(1);
    EXPECT_EQ(g1, (Element{{{-1, 0}, {0, 1}, {0, -1}}, {0, 0}}));
    EXPECT_EQ(a_length(w1), 6u);
    const auto [g2, w2] = make_gn(2);
    EXPECT_EQ(g2, (Element{{{-2, 0}, {0, 2}, {0, -2}}, {0, 0}}));
    EXPECT_EQ(a_length(w2), 12u);
    for (std::int64_t n = 1; n <= 50; ++n) {
        const auto [g, w] = make_gn(n);
        ASSERT_EQ(eval(w), g);
        ASSERT_EQ(eval(parse("s^" + std::to_string(n) + " a s^-" + std::to_string(n) + " t^" + std::to_string(n) +
                                 " a t^-" + std::to_string(2 * n) + " a t^" + std::to_string(n),
                             Alphabet::presentation)),
                  g);
        ASSERT_EQ(a_length(w), static_cast<std::size_t>(6 * n));
    }
    EXPECT_THROW(make_gn(0), std::invalid_argument);
}

TEST(CertifyDepth, SmallCases) {
    const auto c0 = certify_depth(1, 0);
    EXPECT_TRUE(c0.certified);
    EXPECT_EQ(c0.neighborhood_size, 1u);
    EXPECT_EQ(c0.max_witness_length, 6u);

    CertifyOptions cross;
    cross.cross_check_exact = true;
    const auto c1 = certify_depth(1, 1, cross);
    EXPECT_TRUE(c1.certified);
    EXPECT_EQ(c1.neighborhood_size, 18u);

    const auto c4 = certify_depth(4, 4);
    EXPECT_TRUE(c4.certified);
    EXPECT_EQ(c4.neighborhood_size, Ball(4).size());
    EXPECT_LE(c4.max_witness_length, 24u);

    EXPECT_THROW(certify_depth(2, 3), std::invalid_argument);
    EXPECT_THROW(certify_depth(0, 0), std::invalid_argument);
}

TEST(CertifyDepth, NeighboursOfG2AreInsideTheBallByExactSearch) {
    CertifyOptions cross;
    cross.cross_check_exact = true;
    EXPECT_TRUE(certify_depth(2, 2, cross).certified);
}

TEST(CertifyDepth, Json) {
    const auto j = to_json_value(certify_depth(1, 1));
    EXPECT_EQ(j.dump(),
              R"({"ball_radius":6,"failure_witness":null,"k":1,"max_witness_length":6,"n":1,"neighborhood_size":18,"verdict":"certified"})");
}
