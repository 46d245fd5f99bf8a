#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "picactus/errors.hpp"

namespace picactus {

using Vertex = int;
// Unordered edge, stored normalized with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Marker for unreachable entries in distance vectors. DistanceMatrix::at()
// refuses to hand it out, so it cannot leak into arithmetic.
inline constexpr int kUnreachable = -1;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction validates the edge set (no loops, no duplicates, endpoints in
/// range) and derives sorted adjacency lists. All members are const-access;
/// rewrites build new graphs. Safe to share across threads.
class Graph {
public:
    static Graph from_edges(int n, std::vector<Edge> edges) {
        if (n < 1)
            throw input_error("graph order must be at least 1");
        for (auto& e : edges) {
            if (e.first == e.second)
                throw input_error("self-loop at vertex " + std::to_string(e.first));
            if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
                throw input_error("edge endpoint out of range: " + std::to_string(e.first) +
                                  " " + std::to_string(e.second));
            e = make_edge(e.first, e.second);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw input_error("duplicate edge");
        return Graph(n, std::move(edges));
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool is_pendant(Vertex v) const { return degree(v) == 1; }

    int pendant_count() const {
        int k = 0;
        for (const auto& a : adj_)
            if (a.size() == 1) ++k;
        return k;
    }

    /// New graph with one extra edge.
    Graph with_edge(Vertex u, Vertex v) const {
        if (has_edge(u, v))
            throw input_error("edge already present");
        auto es = edges_;
        es.push_back(make_edge(u, v));
        return from_edges(n_, std::move(es));
    }

    /// New graph with vertex v removed; higher vertices shift down by one.
    Graph without_vertex(Vertex v) const {
        check_vertex(v);
        if (n_ == 1)
            throw input_error("cannot remove the last vertex");
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (auto [a, b] : edges_) {
            if (a == v || b == v)
                continue;
            es.push_back(make_edge(a > v ? a - 1 : a, b > v ? b - 1 : b));
        }
        return from_edges(n_ - 1, std::move(es));
    }

    /// New graph with vertices renamed; perm[old] = new, perm a bijection.
    Graph relabeled(const std::vector<Vertex>& perm) const {
        if (static_cast<int>(perm.size()) != n_)
            throw input_error("permutation size mismatch");
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        for (Vertex p : perm) {
            if (p < 0 || p >= n_ || used[static_cast<std::size_t>(p)])
                throw input_error("not a permutation");
            used[static_cast<std::size_t>(p)] = true;
        }
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (auto [a, b] : edges_)
            es.push_back(make_edge(perm[static_cast<std::size_t>(a)],
                                   perm[static_cast<std::size_t>(b)]));
        return from_edges(n_, std::move(es));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Graph(int n, std::vector<Edge> edges)
        : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)) {
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& a : adj_)
            std::sort(a.begin(), a.end());
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex out of range: " + std::to_string(v));
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Incremental helper for building graphs vertex by vertex.
class GraphBuilder {
public:
    Vertex add_vertex() { return n_++; }

    GraphBuilder& add_edge(Vertex u, Vertex v) {
        edges_.push_back({u, v});
        return *this;
    }

    /// Appends a path of `len` new vertices hanging off `at`; returns the far end.
    Vertex add_path(Vertex at, int len) {
        Vertex prev = at;
        for (int i = 0; i < len; ++i) {
            Vertex nv = add_vertex();
            add_edge(prev, nv);
            prev = nv;
        }
        return prev;
    }

    /// Appends a cycle of length c through `at` using c-1 new vertices.
    void add_cycle(Vertex at, int c) {
        Vertex prev = at;
        Vertex first = -1;
        for (int i = 0; i < c - 1; ++i) {
            Vertex nv = add_vertex();
            if (first < 0)
                first = nv;
            add_edge(prev, nv);
            prev = nv;
        }
        add_edge(prev, at);
        (void)first;
    }

    int order() const { return n_; }

    Graph build() const { return Graph::from_edges(n_, edges_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Small factories used all over tests and constructions.

inline Graph single_vertex() { return Graph::from_edges(1, {}); }

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i)
        es.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(es));
}

inline Graph cycle_graph(int c) {
    if (c < 3)
        throw input_error("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < c; ++i)
        es.push_back({i, (i + 1) % c});
    return Graph::from_edges(c, std::move(es));
}

inline Graph star_graph(int n) {
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i)
        es.push_back({0, i});
    return Graph::from_edges(n, std::move(es));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.push_back({i, j});
    return Graph::from_edges(n, std::move(es));
}

/// Triangle with a pendant edge at vertex 0.
inline Graph triangle_with_pendant() {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
}

/// Two triangles sharing vertex 0.
inline Graph bowtie_graph() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

/// Hop counts from `source` to every vertex; kUnreachable where there is no path.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    if (source < 0 || source >= g.order())
        throw input_error("bfs source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<Vertex> q;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

/// All-pairs hop counts. Unreachable pairs are flagged, never numeric:
/// at() throws for them, so distances of split graphs cannot be summed silently.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g) : n_(g.order()) {
        d_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) {
            auto row = bfs_distances(g, v);
            d_.insert(d_.end(), row.begin(), row.end());
        }
    }

    int order() const { return n_; }

    bool reachable(Vertex x, Vertex y) const { return raw(x, y) != kUnreachable; }

    int at(Vertex x, Vertex y) const {
        int d = raw(x, y);
        if (d == kUnreachable)
            throw input_error("distance requested for unreachable pair " +
                              std::to_string(x) + "," + std::to_string(y));
        return d;
    }

    bool all_reachable() const {
        return std::find(d_.begin(), d_.end(), kUnreachable) == d_.end();
    }

private:
    int raw(Vertex x, Vertex y) const {
        if (x < 0 || y < 0 || x >= n_ || y >= n_)
            throw input_error("distance index out of range");
        return d_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(y)];
    }

    int n_;
    std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

inline bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

} // namespace picactus
