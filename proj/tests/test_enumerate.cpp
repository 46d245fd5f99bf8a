#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "picactus/enumerate.hpp"
#include "picactus/indices.hpp"

using namespace picactus;

namespace {

std::set<std::string> cert_set(const std::vector<Graph>& gs) {
    std::set<std::string> out;
    for (const auto& g : gs)
        out.insert(certificate(g));
    return out;
}

} // namespace

TEST_CASE("class counts through order 8", "[enumerate]") {
    const int expected[] = {0, 1, 1, 2, 4, 9, 23, 63, 188};
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_cacti({.n = n}).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("order-3 and order-4 classes are the known ones", "[enumerate]") {
    auto three = enumerate_cacti({.n = 3});
    REQUIRE(three.size() == 2);
    auto certs3 = cert_set(three);
    CHECK(certs3.count(certificate(path_graph(3))) == 1);
    CHECK(certs3.count(certificate(cycle_graph(3))) == 1);

    auto four = cert_set(enumerate_cacti({.n = 4}));
    CHECK(four.count(certificate(path_graph(4))) == 1);
    CHECK(four.count(certificate(star_graph(4))) == 1);
    CHECK(four.count(certificate(triangle_with_pendant())) == 1);
    CHECK(four.count(certificate(cycle_graph(4))) == 1);
}

TEST_CASE("every emitted graph is a cactus of the right order with no duplicates",
          "[enumerate]") {
    for (int n = 1; n <= 7; ++n) {
        auto gs = enumerate_cacti({.n = n});
        std::set<std::string> seen;
        for (const auto& g : gs) {
            CHECK(g.order() == n);
            CHECK(is_cactus(g));
            CHECK(g.size() <= n - 1 + (n - 1) / 2);
            CHECK(seen.insert(certificate(g)).second);
        }
    }
}

TEST_CASE("generator matches the filter oracle through order 6", "[enumerate]") {
    for (int n = 1; n <= 6; ++n)
        CHECK(cert_set(enumerate_cacti({.n = n})) == cert_set(filter_oracle(n)));
}

TEST_CASE("pendant filter", "[enumerate]") {
    auto c41 = enumerate_cacti({.n = 4, .k_filter = 1});
    REQUIRE(c41.size() == 1);
    CHECK(are_isomorphic(c41[0], triangle_with_pendant()));

    CHECK(enumerate_cacti({.n = 3, .k_filter = 1}).empty());
    CHECK(enumerate_cacti({.n = 5, .k_filter = 0}).size() == 2); // C5, bowtie

    // filters partition the classes
    for (int n = 3; n <= 7; ++n) {
        std::size_t total = 0;
        for (int k = 0; k < n; ++k)
            total += enumerate_cacti({.n = n, .k_filter = k}).size();
        CHECK(total == enumerate_cacti({.n = n}).size());
    }
}

TEST_CASE("labeled mode counts labeled cacti", "[enumerate]") {
    CHECK(enumerate_cacti({.n = 3, .labeled = true}).size() == 4);

    // control: count masks directly
    std::size_t labeled4 = 0;
    for (unsigned mask = 0; mask < (1u << 6); ++mask) {
        std::vector<Edge> es;
        int bit = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (mask & (1u << bit))
                    es.push_back({i, j});
                ++bit;
            }
        if (is_cactus(Graph::from_edges(4, std::move(es))))
            ++labeled4;
    }
    auto emitted = enumerate_cacti({.n = 4, .labeled = true});
    CHECK(emitted.size() == labeled4);
    std::set<std::vector<Edge>> distinct;
    for (const auto& g : emitted)
        distinct.insert(g.edges());
    CHECK(distinct.size() == emitted.size());
}

TEST_CASE("worker count never changes the output", "[enumerate]") {
    for (int n : {5, 7}) {
        auto solo = enumerate_cacti({.n = n}, 1);
        auto four = enumerate_cacti({.n = n}, 4);
        REQUIRE(solo.size() == four.size());
        for (std::size_t i = 0; i < solo.size(); ++i)
            CHECK(solo[i].edges() == four[i].edges());
    }
}

TEST_CASE("guards and validation", "[enumerate]") {
    CHECK_THROWS_AS(enumerate_cacti({.n = 11}), resource_error);
    CHECK_NOTHROW(enumerate_cacti({.n = 11, .guard = 11}));
    CHECK_THROWS_AS(enumerate_cacti({.n = 0}), input_error);
    CHECK_THROWS_AS(enumerate_cacti({.n = 4, .k_filter = 4}), input_error);
    CHECK_THROWS_AS(enumerate_cacti({.n = 4, .k_filter = -1}), input_error);
    CHECK_THROWS_AS(enumerate_cacti({.n = 4}, 0), input_error);
    CHECK_THROWS_AS(filter_oracle(8), resource_error);
    CHECK_THROWS_AS(filter_oracle(0), input_error);
}

TEST_CASE("order-9 class count", "[enumerate][slow]") {
    CHECK(enumerate_cacti({.n = 9}).size() == 596);
}
