#include <doctest.h>

#include <random>

#include "mcs/bidomain.hpp"
#include "mcs/policy.hpp"
#include "support/oracles.hpp"

using namespace mcs;
using testsupport::make_graph;

namespace {

Graph fig1_g0() {
    return make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4}});
}
Graph fig1_g1() {
    return make_graph(
        7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 2}, {1, 4}, {1, 6}, {2, 6}});
}

}  // namespace

TEST_SUITE_BEGIN("policy");

TEST_CASE("reward is the bound reduction") {
    Graph g0 = fig1_g0(), g1 = fig1_g1();
    BidomainList dl(g0, g1);
    const int before = dl.over_estimate();
    REQUIRE(before == 7);
    dl.detach_left(0, 0);
    dl.detach_right(0, 0);
    dl.divide(0, 0);
    CHECK(reward(before, dl.over_estimate()) == 1);

    CHECK(reward(4, 4) == 0);
    CHECK(reward(5, 0) == 5);
    CHECK_THROWS_AS(reward(3, 4), InternalError);
}

TEST_CASE("update_scores per variant") {
    SUBCASE("rl accumulates without decay; zero reward is a no-op") {
        ScoreState s(3, 3, false);
        update_scores(s, {Heuristic::rl, false}, 1, 2, 7);
        CHECK(s.s0(1) == 7);
        CHECK(s.s1(2) == 7);
        update_scores(s, {Heuristic::rl, false}, 1, 2, 0);
        CHECK(s.s0(1) == 7);
        CHECK(s.s1(2) == 7);
        // rl never decays, even past the threshold.
        ScoreState hot(2, 2, false, 10, 100);
        update_scores(hot, {Heuristic::rl, false}, 0, 0, 50);
        CHECK(hot.s0(0) == 50);
        CHECK(hot.s1(0) == 50);
    }

    SUBCASE("crossing the short threshold halves the whole s0 list") {
        ScoreState s(3, 3, true);
        s.add_s0(0, 40);
        s.add_s0(1, 99'999);
        s.add_s0(2, 7);
        update_scores(s, {Heuristic::lsm, false}, 1, 0, 2);  // 100,001 > 1e5
        CHECK(s.s0(0) == 20);
        CHECK(s.s0(1) == 50'000);
        CHECK(s.s0(2) == 3);
    }

    SUBCASE("sm decays s0 and s1 independently") {
        ScoreState s(2, 2, false, /*t_short=*/10, /*t_long=*/1000);
        update_scores(s, {Heuristic::sm, false}, 0, 0, 11);  // both cross
        CHECK(s.s0(0) == 5);
        CHECK(s.s1(0) == 5);
        update_scores(s, {Heuristic::sm, false}, 1, 0, 9);  // s0(1)=9 stays, s1(0)=14 halves
        CHECK(s.s0(0) == 5);
        CHECK(s.s0(1) == 9);
        CHECK(s.s1(0) == 7);
    }

    SUBCASE("pair-table decay halves exactly one row") {
        const std::uint64_t tl = kDefaultLongThreshold;
        ScoreState s(3, 3, true);
        s.add_pair(1, 0, tl - 1);
        s.add_pair(1, 1, 10);
        s.add_pair(1, 2, 11);
        s.add_pair(0, 0, 500);
        update_scores(s, {Heuristic::lsm, false}, 1, 0, 2);  // row 1 crosses t_long
        CHECK(s.pair_score(1, 0) == (tl + 1) / 2);
        CHECK(s.pair_score(1, 1) == 5);
        CHECK(s.pair_score(1, 2) == 5);
        CHECK(s.pair_score(0, 0) == 500);  // other rows untouched
        CHECK(s.s0(1) == 2);
    }

    SUBCASE("sparse pair rows behave like the dense table") {
        ScoreState dense(4, 4, true, 100, 50, /*pair_cell_budget=*/1000);
        ScoreState sparse(4, 4, true, 100, 50, /*pair_cell_budget=*/2);
        for (auto* s : {&dense, &sparse}) {
            update_scores(*s, {Heuristic::lsm, false}, 2, 1, 30);
            update_scores(*s, {Heuristic::lsm, false}, 2, 3, 40);
            update_scores(*s, {Heuristic::lsm, false}, 2, 1, 30);  // row 2 crosses 50
        }
        for (int q = 0; q < 4; ++q) CHECK(dense.pair_score(2, q) == sparse.pair_score(2, q));
        CHECK(dense.pair_score(2, 1) == 30);
        CHECK(dense.pair_score(2, 3) == 20);
    }

    SUBCASE("mcsplit keeps no scores") {
        ScoreState s(2, 2, false);
        CHECK_THROWS_AS(update_scores(s, {Heuristic::mcsplit, false}, 0, 0, 1), InternalError);
    }
}

TEST_CASE("halving preserves weak order") {
    std::mt19937 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t a = rng(), b = rng();
        if (a > b) CHECK(a / 2 >= b / 2);
    }
}

TEST_CASE("score boundedness under decay") {
    std::mt19937 rng(9);
    ScoreState s(5, 5, true);
    PolicyVariant lsm{Heuristic::lsm, false};
    for (int i = 0; i < 20'000; ++i) {
        const int p = static_cast<int>(rng() % 5), q = static_cast<int>(rng() % 5);
        update_scores(s, lsm, p, q, rng() % 50);
        CHECK(s.s0(p) <= 2 * kDefaultShortThreshold);
        CHECK(s.pair_score(p, q) <= 2 * kDefaultLongThreshold);
    }
}

TEST_CASE("first-vertex selection") {
    Graph g0 = fig1_g0();
    ScoreState zero(8, 7, true);

    SUBCASE("mcsplit picks the largest degree, index-ascending ties") {
        const std::vector<int> left{6, 7};  // both degree 1
        CHECK(select_first_vertex(left, g0, zero, {Heuristic::mcsplit, false}) == 6);
        const std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
        CHECK(select_first_vertex(all, g0, zero, {Heuristic::mcsplit, false}) == 0);
    }
    SUBCASE("rl picks the largest s0") {
        ScoreState s(8, 7, false);
        s.add_s0(4, 5);
        s.add_s0(2, 3);
        const std::vector<int> left{2, 4};
        CHECK(select_first_vertex(left, g0, s, {Heuristic::rl, false}) == 4);
    }
    SUBCASE("lsm with all-zero scores falls back to the degree rule") {
        const std::vector<int> left{1, 2, 3, 4};
        CHECK(select_first_vertex(left, g0, zero, {Heuristic::lsm, false}) ==
              select_first_vertex(left, g0, zero, {Heuristic::mcsplit, false}));
    }
}

TEST_CASE("second-vertex enumeration order") {
    Graph g1 = fig1_g1();
    ScoreState zero(8, 7, true);

    SUBCASE("mcsplit orders by degree then index") {
        // Degrees: c(2)=3, e(4)=2, g(6)=3.
        const std::vector<int> right{2, 4, 6};
        CHECK(order_second_vertices(right, 0, g1, zero, {Heuristic::mcsplit, false}) ==
              std::vector<int>{2, 6, 4});
    }
    SUBCASE("rl orders by s1 with degree tie-break") {
        ScoreState s(8, 7, false);
        s.add_s1(2, 7);
        s.add_s1(4, 9);
        s.add_s1(6, 9);
        // deg(e)=2 < deg(g)=3, so g precedes e at equal score.
        const std::vector<int> right{2, 4, 6};
        CHECK(order_second_vertices(right, 0, g1, s, {Heuristic::rl, false}) ==
              std::vector<int>{6, 4, 2});
    }
    SUBCASE("lsm with an empty pair table degrades to degree order") {
        const std::vector<int> right{2, 4, 6};
        CHECK(order_second_vertices(right, 3, g1, zero, {Heuristic::lsm, false}) ==
              std::vector<int>{2, 6, 4});
    }
    SUBCASE("pick_second_vertex agrees with the full ordering") {
        ScoreState s(8, 7, true);
        s.add_pair(3, 2, 4);
        s.add_pair(3, 6, 11);
        const std::vector<int> right{2, 4, 6};
        const auto order = order_second_vertices(right, 3, g1, s, {Heuristic::lsm, false});
        std::vector<int> picked;
        std::vector<bool> taken(7, false);
        while (true) {
            const int q = pick_second_vertex(right, 3, g1, s, {Heuristic::lsm, false},
                                             [&](int w) { return taken[static_cast<std::size_t>(w)]; });
            if (q < 0) break;
            taken[static_cast<std::size_t>(q)] = true;
            picked.push_back(q);
        }
        CHECK(picked == order);
    }
}

TEST_SUITE_END();
