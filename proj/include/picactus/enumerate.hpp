#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "picactus/canonical.hpp"
#include "picactus/structure.hpp"

namespace picactus {

inline constexpr int kDefaultEnumerationGuard = 10;

struct EnumerationSpec {
    int n = 1;
    std::optional<int> k_filter{};
    bool labeled = false;
    // Raise deliberately for bigger runs; certificates cap at order 16 anyway.
    int guard = kDefaultEnumerationGuard;
};

namespace detail {

inline Graph attach_pendant(const Graph& g, Vertex at) {
    auto es = g.edges();
    es.push_back({at, g.order()});
    return Graph::from_edges(g.order() + 1, std::move(es));
}

inline Graph attach_cycle(const Graph& g, Vertex at, int c) {
    auto es = g.edges();
    Vertex prev = at;
    for (int i = 0; i < c - 1; ++i) {
        Vertex nv = g.order() + i;
        es.push_back(make_edge(prev, nv));
        prev = nv;
    }
    es.push_back(make_edge(prev, at));
    return Graph::from_edges(g.order() + c - 1, std::move(es));
}

// Grow one seed to full order by attaching leaf blocks at every vertex,
// deduplicating partial shapes per order. Returns the order-n classes.
inline std::map<std::string, Graph> complete_cacti(const Graph& seed, int n) {
    std::map<int, std::map<std::string, Graph>> buckets;
    buckets[seed.order()].emplace(certificate(seed), seed);
    for (int o = seed.order(); o < n; ++o) {
        auto it = buckets.find(o);
        if (it == buckets.end())
            continue;
        for (const auto& [cert, g] : it->second) {
            for (Vertex v = 0; v < g.order(); ++v) {
                auto pend = attach_pendant(g, v);
                buckets[o + 1].try_emplace(certificate(pend), pend);
                for (int c = 3; c <= n - o + 1; ++c) {
                    auto cyc = attach_cycle(g, v, c);
                    buckets[o + c - 1].try_emplace(certificate(cyc), cyc);
                }
            }
        }
    }
    return std::move(buckets[n]);
}

inline void emit_labelings(const Graph& g, const std::function<void(const Graph&)>& sink) {
    const int n = g.order();
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<Edge>> seen;
    do {
        seen.insert(g.relabeled(perm).edges());
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& es : seen)
        sink(Graph::from_edges(n, std::vector<Edge>(es)));
}

} // namespace detail

/// Every cactus of order spec.n, exactly once per isomorphism class (or
/// once per labeled graph when spec.labeled). Deterministic: emission is in
/// certificate order and independent of the worker count.
inline void enumerate_cacti(const EnumerationSpec& spec,
                            const std::function<void(const Graph&)>& sink, int jobs = 1) {
    if (spec.n < 1)
        throw input_error("enumeration needs n >= 1");
    if (spec.k_filter && (*spec.k_filter < 0 || *spec.k_filter >= spec.n))
        throw input_error("pendant filter must satisfy 0 <= k < n");
    if (spec.n > spec.guard)
        throw resource_error("enumeration guard is n <= " + std::to_string(spec.guard));
    if (jobs < 1)
        throw input_error("jobs must be positive");

    std::map<std::string, Graph> classes;
    if (spec.n == 1) {
        auto k1 = single_vertex();
        classes.emplace(certificate(k1), k1);
    } else {
        // Independent subtrees: one per possible first block. Duplicates
        // across seeds fall out at the merge; merging in seed order keeps the
        // surviving representative independent of scheduling.
        std::vector<Graph> seeds;
        seeds.push_back(path_graph(2));
        for (int c = 3; c <= spec.n; ++c)
            seeds.push_back(cycle_graph(c));

        std::vector<std::map<std::string, Graph>> results(seeds.size());
        if (jobs == 1) {
            for (std::size_t i = 0; i < seeds.size(); ++i)
                results[i] = detail::complete_cacti(seeds[i], spec.n);
        } else {
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= seeds.size())
                        return;
                    results[i] = detail::complete_cacti(seeds[i], spec.n);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back(worker);
            for (auto& th : pool)
                th.join();
        }
        for (auto& r : results)
            for (auto& [cert, g] : r)
                classes.try_emplace(cert, g);
    }

    for (const auto& [cert, g] : classes) {
        if (spec.k_filter && g.pendant_count() != *spec.k_filter)
            continue;
        if (spec.labeled)
            detail::emit_labelings(g, sink);
        else
            sink(g);
    }
}

inline std::vector<Graph> enumerate_cacti(const EnumerationSpec& spec, int jobs = 1) {
    std::vector<Graph> out;
    enumerate_cacti(spec, [&](const Graph& g) { out.push_back(g); }, jobs);
    return out;
}

/// Brute-force control: every edge subset in the cactus size window, filtered
/// by is_cactus, deduplicated by certificate. Only for validating the
/// generator; the mask loop caps the order hard.
inline std::vector<Graph> filter_oracle(int n) {
    if (n < 1)
        throw input_error("filter oracle needs n >= 1");
    if (n > 7)
        throw resource_error("filter oracle supports n <= 7");
    if (n == 1)
        return {single_vertex()};
    const int pairs = n * (n - 1) / 2;
    const int lo = n - 1, hi = n - 1 + (n - 1) / 2;
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            all.push_back({i, j});
    std::map<std::string, Graph> classes;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        int m = __builtin_popcount(mask);
        if (m < lo || m > hi)
            continue;
        std::vector<Edge> es;
        for (int b = 0; b < pairs; ++b)
            if (mask & (1u << b))
                es.push_back(all[static_cast<std::size_t>(b)]);
        auto g = Graph::from_edges(n, std::move(es));
        if (!is_cactus(g))
            continue;
        classes.try_emplace(certificate(g), g);
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (const auto& [cert, g] : classes)
        out.push_back(g);
    return out;
}

} // namespace picactus
