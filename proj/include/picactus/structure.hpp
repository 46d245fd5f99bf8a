#pragma once

#include <algorithm>
#include <vector>

#include "picactus/graph.hpp"

namespace picactus {

enum class BlockKind { edge, cycle, other };

/// One biconnected component. For cycle blocks `vertices` walks the cycle in
/// cyclic order; otherwise it is sorted ascending. `edges` is always sorted.
struct Block {
    BlockKind kind;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int length() const { return static_cast<int>(vertices.size()); }
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<bool> is_cut_vertex;

    int cut_edge_count() const {
        int t = 0;
        for (const auto& b : blocks)
            t += b.kind == BlockKind::edge;
        return t;
    }

    std::vector<int> cycle_lengths() const {
        std::vector<int> ls;
        for (const auto& b : blocks)
            if (b.kind == BlockKind::cycle)
                ls.push_back(b.length());
        std::sort(ls.begin(), ls.end());
        return ls;
    }
};

namespace detail {

inline std::vector<Vertex> cycle_order(const std::vector<Edge>& edges) {
    // Walk the 2-regular block edge by edge.
    std::vector<std::pair<Vertex, Vertex>> next;
    for (auto [u, v] : edges) {
        next.push_back({u, v});
        next.push_back({v, u});
    }
    std::vector<Vertex> order;
    Vertex start = edges.front().first;
    Vertex prev = -1, cur = start;
    do {
        order.push_back(cur);
        Vertex nxt = -1;
        for (auto [a, b] : next)
            if (a == cur && b != prev) {
                nxt = b;
                break;
            }
        prev = cur;
        cur = nxt;
    } while (cur != start);
    return order;
}

inline Block make_block(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    std::vector<Vertex> verts;
    for (auto [u, v] : edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    Block b;
    b.edges = std::move(edges);
    if (b.edges.size() == 1) {
        b.kind = BlockKind::edge;
        b.vertices = std::move(verts);
    } else if (b.edges.size() == verts.size()) {
        // biconnected with |E| == |V| is exactly a cycle
        b.kind = BlockKind::cycle;
        b.vertices = cycle_order(b.edges);
    } else {
        b.kind = BlockKind::other;
        b.vertices = std::move(verts);
    }
    return b;
}

} // namespace detail

/// Biconnected components of a connected graph (iterative Hopcroft–Tarjan).
inline BlockDecomposition block_decompose(const Graph& g) {
    if (!is_connected(g))
        throw input_error("block decomposition requires a connected graph");
    const int n = g.order();

    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    BlockDecomposition out;
    out.is_cut_vertex.assign(static_cast<std::size_t>(n), false);
    std::vector<int> block_count(static_cast<std::size_t>(n), 0);

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    int timer = 0;

    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        auto& f = stack.back();
        auto nbrs = g.neighbors(f.v);
        if (f.next < nbrs.size()) {
            Vertex w = nbrs[f.next++];
            if (w == f.parent)
                continue;
            auto wi = static_cast<std::size_t>(w);
            auto vi = static_cast<std::size_t>(f.v);
            if (disc[wi] == -1) {
                edge_stack.push_back(make_edge(f.v, w));
                disc[wi] = low[wi] = timer++;
                stack.push_back({w, f.v, 0});
            } else if (disc[wi] < disc[vi]) {
                edge_stack.push_back(make_edge(f.v, w));
                low[vi] = std::min(low[vi], disc[wi]);
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (stack.empty())
                break;
            auto vi = static_cast<std::size_t>(done.v);
            auto pi = static_cast<std::size_t>(done.parent);
            low[pi] = std::min(low[pi], low[vi]);
            if (low[vi] >= disc[pi]) {
                // pop one component ending at the tree edge parent--v
                std::vector<Edge> comp;
                Edge top = make_edge(done.parent, done.v);
                for (;;) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    comp.push_back(e);
                    if (e == top)
                        break;
                }
                auto blk = detail::make_block(std::move(comp));
                for (Vertex u : blk.vertices)
                    ++block_count[static_cast<std::size_t>(u)];
                out.blocks.push_back(std::move(blk));
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (block_count[static_cast<std::size_t>(v)] > 1)
            out.is_cut_vertex[static_cast<std::size_t>(v)] = true;
    return out;
}

/// Connected and every block is a single edge or a cycle.
inline bool is_cactus(const Graph& g) {
    if (!is_connected(g))
        return false;
    if (g.order() == 1)
        return true;
    auto dec = block_decompose(g);
    return std::all_of(dec.blocks.begin(), dec.blocks.end(),
                       [](const Block& b) { return b.kind != BlockKind::other; });
}

/// Shape summary of a cactus; enough to say which extremal family it is in.
struct CactusProfile {
    int order = 0;
    int pendant_count = 0;
    std::vector<int> cycle_lengths;
    int cut_edge_count = 0;

    int cycle_count() const { return static_cast<int>(cycle_lengths.size()); }

    bool all_cycles_of_length(int c) const {
        return std::all_of(cycle_lengths.begin(), cycle_lengths.end(),
                           [c](int x) { return x == c; });
    }
};

inline CactusProfile cactus_profile(const Graph& g) {
    if (!is_cactus(g))
        throw structural_error("not a cactus");
    CactusProfile p;
    p.order = g.order();
    p.pendant_count = g.pendant_count();
    if (g.order() == 1)
        return p;
    auto dec = block_decompose(g);
    p.cycle_lengths = dec.cycle_lengths();
    p.cut_edge_count = dec.cut_edge_count();
    return p;
}

} // namespace picactus
