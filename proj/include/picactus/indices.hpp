#pragma once

#include <cstdint>
#include <string>

#include "picactus/graph.hpp"
#include "picactus/structure.hpp"

namespace picactus {

// Distance-based indices. All of them need every pair reachable, so the
// entry points insist on connectivity and fail loudly otherwise. Totals are
// accumulated in checked 64-bit arithmetic; at the size guard below the
// mathematical maxima fit comfortably, the checks are belt and braces.

inline constexpr int kMaxIndexOrder = 10000;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw resource_error("index accumulator overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw resource_error("index accumulator overflow");
    return r;
}

inline void require_index_input(const Graph& g, const char* what) {
    if (g.order() > kMaxIndexOrder)
        throw resource_error(std::string(what) + " supports order <= " +
                             std::to_string(kMaxIndexOrder));
    if (!is_connected(g))
        throw input_error(std::string(what) + " requires a connected graph");
}

} // namespace detail

/// Vertices strictly nearer each endpoint of xy, endpoints themselves not
/// counted on either side. first ~ x, second ~ y.
inline std::pair<std::int64_t, std::int64_t> closer_counts(const std::vector<int>& dist_x,
                                                           const std::vector<int>& dist_y,
                                                           Edge e) {
    std::int64_t nx = 0, ny = 0;
    for (Vertex w = 0; w < static_cast<Vertex>(dist_x.size()); ++w) {
        if (w == e.first || w == e.second)
            continue;
        int dx = dist_x[static_cast<std::size_t>(w)];
        int dy = dist_y[static_cast<std::size_t>(w)];
        if (dx < dy)
            ++nx;
        else if (dy < dx)
            ++ny;
    }
    return {nx, ny};
}

/// n_e(x) + n_e(y) for one edge.
inline std::int64_t pi_edge_contribution(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw input_error("no such edge");
    detail::require_index_input(g, "pi_edge_contribution");
    auto [nx, ny] = closer_counts(bfs_distances(g, e.first), bfs_distances(g, e.second), e);
    return detail::checked_add(nx, ny);
}

inline std::int64_t vertex_pi(const Graph& g) {
    detail::require_index_input(g, "vertex_pi");
    std::int64_t total = 0;
    for (Edge e : g.edges()) {
        auto [nx, ny] = closer_counts(bfs_distances(g, e.first), bfs_distances(g, e.second), e);
        total = detail::checked_add(total, detail::checked_add(nx, ny));
    }
    return total;
}

inline std::int64_t szeged(const Graph& g) {
    detail::require_index_input(g, "szeged");
    std::int64_t total = 0;
    for (Edge e : g.edges()) {
        auto [nx, ny] = closer_counts(bfs_distances(g, e.first), bfs_distances(g, e.second), e);
        total = detail::checked_add(total, detail::checked_mul(nx, ny));
    }
    return total;
}

inline std::int64_t wiener(const Graph& g) {
    detail::require_index_input(g, "wiener");
    std::int64_t total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (Vertex w = v + 1; w < g.order(); ++w)
            total = detail::checked_add(total, dist[static_cast<std::size_t>(w)]);
    }
    return total;
}

/// Edge variant: edges strictly nearer each endpoint of e, where the distance
/// from an edge to a vertex is the nearer of its two endpoints, and e itself
/// is left out of the count.
inline std::int64_t edge_pi(const Graph& g) {
    detail::require_index_input(g, "edge_pi");
    std::int64_t total = 0;
    for (Edge e : g.edges()) {
        auto dist_x = bfs_distances(g, e.first);
        auto dist_y = bfs_distances(g, e.second);
        for (Edge f : g.edges()) {
            if (f == e)
                continue;
            int dfx = std::min(dist_x[static_cast<std::size_t>(f.first)],
                               dist_x[static_cast<std::size_t>(f.second)]);
            int dfy = std::min(dist_y[static_cast<std::size_t>(f.first)],
                               dist_y[static_cast<std::size_t>(f.second)]);
            if (dfx != dfy)
                total = detail::checked_add(total, 1);
        }
    }
    return total;
}

enum class EdgeClass { cut, even_cycle, odd_cycle };

/// Which kind of block the edge sits in. Only meaningful on cacti.
inline EdgeClass classify_edge(const BlockDecomposition& dec, Edge e) {
    e = make_edge(e.first, e.second);
    for (const auto& b : dec.blocks) {
        if (!std::binary_search(b.edges.begin(), b.edges.end(), e))
            continue;
        if (b.kind == BlockKind::edge)
            return EdgeClass::cut;
        if (b.kind == BlockKind::cycle)
            return b.length() % 2 == 0 ? EdgeClass::even_cycle : EdgeClass::odd_cycle;
        throw structural_error("edge lies in a non-cactus block");
    }
    throw input_error("edge not in any block");
}

/// Sum of per-edge contributions across one cycle block.
inline std::int64_t cycle_pi_total(const Graph& g, const Block& block) {
    if (block.kind != BlockKind::cycle)
        throw input_error("cycle_pi_total needs a cycle block");
    detail::require_index_input(g, "cycle_pi_total");
    std::int64_t total = 0;
    for (Edge e : block.edges)
        total = detail::checked_add(total, pi_edge_contribution(g, e));
    return total;
}

struct IndexReport {
    int order = 0;
    int size = 0;
    std::int64_t vertex_pi = 0;
    std::int64_t edge_pi = 0;
    std::int64_t wiener = 0;
    std::int64_t szeged = 0;
};

inline IndexReport index_report(const Graph& g) {
    IndexReport r;
    r.order = g.order();
    r.size = g.size();
    r.vertex_pi = vertex_pi(g);
    r.edge_pi = edge_pi(g);
    r.wiener = wiener(g);
    r.szeged = szeged(g);
    return r;
}

} // namespace picactus
