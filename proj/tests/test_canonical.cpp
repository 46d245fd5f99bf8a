#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "picactus/canonical.hpp"

using namespace picactus;

namespace {

// Independent oracle: minimum adjacency bit string over every permutation.
std::string brute_canon(const Graph& g) {
    const int n = g.order();
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::iota(pos.begin(), pos.end(), 0);
    std::string best;
    do {
        std::string s(static_cast<std::size_t>(n * (n - 1) / 2), '0');
        int bit = 0;
        std::vector<int> at(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            at[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = v;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (g.has_edge(at[static_cast<std::size_t>(a)], at[static_cast<std::size_t>(b)]))
                    s[static_cast<std::size_t>(bit)] = '1';
                ++bit;
            }
        if (best.empty() || s < best)
            best = s;
    } while (std::next_permutation(pos.begin(), pos.end()));
    return best;
}

Graph graph_from_mask(int n, unsigned mask) {
    std::vector<Edge> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (mask & (1u << bit))
                es.push_back({i, j});
            ++bit;
        }
    return Graph::from_edges(n, std::move(es));
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST_CASE("certificate is a complete isomorphism invariant for order <= 5", "[canonical]") {
    for (int n = 1; n <= 5; ++n) {
        const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
        // cert value -> oracle class, and back; both maps must stay functional
        std::map<std::string, std::string> cert_to_brute;
        std::map<std::string, std::string> brute_to_cert;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            auto g = graph_from_mask(n, mask);
            auto c = certificate(g);
            auto b = brute_canon(g);
            auto [it1, fresh1] = cert_to_brute.try_emplace(c, b);
            if (!fresh1)
                REQUIRE(it1->second == b);
            auto [it2, fresh2] = brute_to_cert.try_emplace(b, c);
            if (!fresh2)
                REQUIRE(it2->second == c);
        }
        CHECK(cert_to_brute.size() == brute_to_cert.size());
    }
}

TEST_CASE("certificate matches the oracle on sampled order-6 graphs", "[canonical]") {
    std::mt19937 rng(7);
    std::map<std::string, std::string> cert_to_brute;
    std::map<std::string, std::string> brute_to_cert;
    for (int trial = 0; trial < 150; ++trial) {
        auto g = graph_from_mask(6, rng() & 0x7fffu);
        auto c = certificate(g);
        auto b = brute_canon(g);
        auto [it1, fresh1] = cert_to_brute.try_emplace(c, b);
        if (!fresh1)
            REQUIRE(it1->second == b);
        auto [it2, fresh2] = brute_to_cert.try_emplace(b, c);
        if (!fresh2)
            REQUIRE(it2->second == c);
    }
}

TEST_CASE("certificate is invariant under relabeling", "[canonical]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto g = graph_from_mask(n, static_cast<unsigned>(rng()));
        auto c = certificate(g);
        for (int rep = 0; rep < 4; ++rep)
            CHECK(certificate(g.relabeled(random_permutation(rng, n))) == c);
    }
}

TEST_CASE("isomorphism checks on hand-picked pairs", "[canonical]") {
    CHECK(are_isomorphic(path_graph(4), path_graph(4).relabeled({3, 1, 0, 2})));
    CHECK(!are_isomorphic(path_graph(4), star_graph(4)));
    // same order and size, different structure
    auto two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(!are_isomorphic(two_triangles, cycle_graph(6)));
    CHECK(are_isomorphic(cycle_graph(5), cycle_graph(5).relabeled({2, 4, 1, 3, 0})));
    CHECK(!are_isomorphic(path_graph(3), path_graph(4)));
}

TEST_CASE("certificate hex is stable and distinct across small graphs", "[canonical]") {
    std::set<std::string> seen;
    seen.insert(certificate_hex(path_graph(4)));
    seen.insert(certificate_hex(star_graph(4)));
    seen.insert(certificate_hex(cycle_graph(4)));
    CHECK(seen.size() == 3);
    CHECK(certificate_hex(path_graph(2)) == "0280");
}

TEST_CASE("certificate guard rejects large orders", "[canonical]") {
    CHECK_NOTHROW(certificate(path_graph(16)));
    CHECK_THROWS_AS(certificate(path_graph(17)), resource_error);
}
