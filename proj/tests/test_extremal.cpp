#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "picactus/extremal.hpp"

using namespace picactus;

TEST_CASE("bound formulas on pinned cells", "[extremal]") {
    CHECK(pi_upper_bound(5, 1) == 15);
    CHECK(pi_upper_bound(4, 2) == 6);
    CHECK(pi_upper_bound(8, 0) == 54);
    CHECK(pi_upper_bound(11, 0) == 117);
    CHECK(pi_upper_bound(12, 0) == 140);

    CHECK(pi_lower_bound(4, 1) == 4);
    CHECK(pi_lower_bound(5, 0) == 8);
    CHECK(pi_lower_bound(3, 2) == 2);
    CHECK(pi_lower_bound(5, 1) == 10);
    CHECK(pi_lower_bound(6, 0) == 16);

    // degenerate shapes
    CHECK(pi_upper_bound(1, 0) == 0);
    CHECK(pi_lower_bound(1, 0) == 0);
    CHECK(pi_upper_bound(2, 2) == 0);
    CHECK(pi_lower_bound(2, 2) == 0);

    // star regime: both formulas collapse to (n-1)(n-2)
    for (int n = 3; n <= 9; ++n) {
        CHECK(pi_upper_bound(n, n - 1) == static_cast<std::int64_t>(n - 1) * (n - 2));
        CHECK(pi_lower_bound(n, n - 1) == static_cast<std::int64_t>(n - 1) * (n - 2));
        CHECK(pi_lower_bound(n, n - 2) == static_cast<std::int64_t>(n - 1) * (n - 2));
    }
}

TEST_CASE("bound query validation", "[extremal]") {
    CHECK_THROWS_AS(pi_upper_bound(0, 0), input_error);
    CHECK_THROWS_AS(pi_upper_bound(5, 5), input_error);
    CHECK_THROWS_AS(pi_lower_bound(5, -1), input_error);
    CHECK_THROWS_AS(pi_lower_bound(1, 1), input_error);
    CHECK_THROWS_AS(pi_upper_bound(2, 3), input_error);
    CHECK_NOTHROW(pi_upper_bound(2, 0));
    CHECK_NOTHROW(pi_upper_bound(2, 1));
}

TEST_CASE("max constructor on pinned cells", "[extremal]") {
    auto g51 = construct_max(5, 1);
    REQUIRE(g51);
    CHECK(are_isomorphic(*g51, Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})));
    CHECK(vertex_pi(*g51) == 15);

    auto g70 = construct_max(7, 0);
    REQUIRE(g70);
    CHECK(vertex_pi(*g70) == 40);
    auto p70 = cactus_profile(*g70);
    CHECK(p70.cycle_lengths == std::vector<int>{4, 4});
    CHECK(p70.cut_edge_count == 0);

    auto g92 = construct_max(9, 2);
    REQUIRE(g92);
    CHECK(vertex_pi(*g92) == 70);

    auto g80 = construct_max(8, 0);
    REQUIRE(g80);
    CHECK(vertex_pi(*g80) == 54);
    CHECK(cactus_profile(*g80).cut_edge_count == 1); // two C4 groups over a bridge

    auto g120 = construct_max(12, 0);
    REQUIRE(g120);
    CHECK(cactus_profile(*g120).cycle_lengths == std::vector<int>{4, 4, 6});
    CHECK(vertex_pi(*g120) == 140);
}

TEST_CASE("min constructor on pinned cells", "[extremal]") {
    auto g41 = construct_min(4, 1);
    REQUIRE(g41);
    CHECK(are_isomorphic(*g41, triangle_with_pendant()));
    CHECK(vertex_pi(*g41) == 4);

    auto g50 = construct_min(5, 0);
    REQUIRE(g50);
    CHECK(are_isomorphic(*g50, bowtie_graph()));
    CHECK(vertex_pi(*g50) == 8);

    auto g60 = construct_min(6, 0);
    REQUIRE(g60);
    CHECK(vertex_pi(*g60) == 16);
    auto p60 = cactus_profile(*g60);
    CHECK(p60.cycle_lengths == std::vector<int>{3, 3});
    CHECK(p60.cut_edge_count == 1);

    auto g30 = construct_min(3, 0);
    REQUIRE(g30);
    CHECK(are_isomorphic(*g30, cycle_graph(3)));
}

TEST_CASE("no-witness cells", "[extremal]") {
    std::set<std::pair<int, int>> max_missing, min_missing;
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            if (!construct_max(n, k))
                max_missing.insert({n, k});
            if (!construct_min(n, k))
                min_missing.insert({n, k});
        }
    CHECK(max_missing == std::set<std::pair<int, int>>{
                             {2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 1}, {5, 0}});
    CHECK(min_missing == std::set<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}, {4, 0}});
}

TEST_CASE("constructed witnesses are tight across the board", "[extremal]") {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 0; k <= n - 1; ++k) {
            auto gmax = construct_max(n, k);
            if (gmax) {
                REQUIRE(is_cactus(*gmax));
                CHECK(gmax->order() == n);
                CHECK(gmax->pendant_count() == (n == 2 ? 2 : k));
                CHECK(vertex_pi(*gmax) == pi_upper_bound(n, k));
                CHECK(matches_characterization(cactus_profile(*gmax), Direction::max));
            }
            auto gmin = construct_min(n, k);
            if (gmin) {
                REQUIRE(is_cactus(*gmin));
                CHECK(gmin->order() == n);
                CHECK(gmin->pendant_count() == (n == 2 ? 2 : k));
                CHECK(vertex_pi(*gmin) == pi_lower_bound(n, k));
                CHECK(matches_characterization(cactus_profile(*gmin), Direction::min));
            }
        }
    }
    CHECK(vertex_pi(*construct_max(2, 2)) == 0);
    CHECK(vertex_pi(*construct_min(2, 2)) == 0);
    CHECK(construct_max(1, 0)->order() == 1);
}

TEST_CASE("exclusion table", "[extremal]") {
    CHECK(is_excluded(cycle_graph(3), Direction::max));
    CHECK(is_excluded(cycle_graph(3), Direction::min));
    CHECK(is_excluded(triangle_with_pendant(), Direction::max));
    CHECK(is_excluded(triangle_with_pendant(), Direction::min));
    CHECK(is_excluded(cycle_graph(4), Direction::max));
    CHECK(is_excluded(cycle_graph(4), Direction::min));
    CHECK(is_excluded(cycle_graph(5), Direction::max));
    CHECK(!is_excluded(cycle_graph(5), Direction::min));
    CHECK(!is_excluded(cycle_graph(6), Direction::max));
    CHECK(!is_excluded(cycle_graph(6), Direction::min));
    CHECK(!is_excluded(path_graph(3), Direction::max));
    CHECK(!is_excluded(path_graph(4), Direction::min));
    CHECK(!is_excluded(star_graph(5), Direction::max));
    CHECK(!is_excluded(bowtie_graph(), Direction::min));
}

TEST_CASE("characterization predicate", "[extremal]") {
    auto prof = [](int order, int pend, std::vector<int> cycles, int cut) {
        CactusProfile p;
        p.order = order;
        p.pendant_count = pend;
        p.cycle_lengths = std::move(cycles);
        p.cut_edge_count = cut;
        return p;
    };
    CHECK(matches_characterization(prof(9, 0, {4, 4}, 0), Direction::max));
    CHECK(matches_characterization(prof(10, 0, {4, 6}, 0), Direction::max));
    CHECK(matches_characterization(prof(6, 1, {3, 3}, 1), Direction::min));
    CHECK(!matches_characterization(prof(5, 0, {5}, 0), Direction::max));
    CHECK(!matches_characterization(prof(5, 0, {3, 3}, 0), Direction::max));
    CHECK(!matches_characterization(prof(9, 0, {4, 4}, 3), Direction::max)); // cut > k+2
    CHECK(!matches_characterization(prof(10, 0, {4, 6}, 1), Direction::max)); // cut != k
    CHECK(!matches_characterization(prof(10, 0, {6, 6}, 0), Direction::max));
    CHECK(!matches_characterization(prof(5, 0, {4}, 0), Direction::min));
    CHECK(!matches_characterization(prof(8, 1, {3, 3}, 3), Direction::min)); // cut > k+1

    // trees: clause boundaries are exactly the tree regimes
    for (int n = 3; n <= 9; ++n)
        for (int k = 1; k < n; ++k) {
            auto tree = prof(n, k, {}, n - 1);
            CHECK(matches_characterization(tree, Direction::max) == (n <= k + 3));
            CHECK(matches_characterization(tree, Direction::min) == (n <= k + 2));
        }
}
