#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "picactus/graph.hpp"

namespace picactus {

// Exact canonical certificates via colour refinement plus individualization.
// Two graphs get equal certificates iff they are isomorphic; no hashing, no
// collision caveats. Sized for the enumeration range, hence the hard guard.

inline constexpr int kMaxCertificateOrder = 16;

namespace detail {

// Equitable refinement. New colour ids are assigned by sorted signature, so
// they depend only on the isomorphism class, never on vertex labels.
inline int refine_colors(const Graph& g, std::vector<int>& color) {
    const int n = g.order();
    // -1 forces a first pass that renumbers whatever colours came in (the
    // individualization step injects values outside 0..classes-1).
    int classes = -1;
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(color[static_cast<std::size_t>(v)]);
            for (Vertex w : g.neighbors(v))
                s.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(s.begin() + 1, s.end());
        }
        auto uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        if (static_cast<int>(uniq.size()) == classes)
            return classes;
        classes = static_cast<int>(uniq.size());
        for (Vertex v = 0; v < n; ++v)
            color[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) -
                uniq.begin());
    }
}

inline std::string leaf_certificate(const Graph& g, const std::vector<int>& pos) {
    const int n = g.order();
    std::string cert(1 + static_cast<std::size_t>((n * (n - 1) / 2 + 7) / 8), '\0');
    cert[0] = static_cast<char>(n);
    std::vector<Vertex> at(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        at[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = v;
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(at[static_cast<std::size_t>(a)], at[static_cast<std::size_t>(b)]))
                cert[1 + static_cast<std::size_t>(bit / 8)] |=
                    static_cast<char>(0x80u >> (bit % 8));
            ++bit;
        }
    return cert;
}

// Swapping u and w is an automorphism exactly when their neighbourhoods agree
// away from the pair itself.
inline bool swappable(const Graph& g, Vertex u, Vertex w) {
    auto nu = g.neighbors(u);
    auto nw = g.neighbors(w);
    std::vector<Vertex> a(nu.begin(), nu.end());
    std::vector<Vertex> b(nw.begin(), nw.end());
    std::erase(a, w);
    std::erase(b, u);
    return a == b;
}

inline void canon_search(const Graph& g, std::vector<int> color, std::string& best) {
    const int n = g.order();
    int classes = refine_colors(g, color);
    if (classes == n) {
        std::string cand = leaf_certificate(g, color);
        if (best.empty() || cand < best)
            best = std::move(cand);
        return;
    }
    // Branch on the first colour class with more than one vertex.
    int target = -1;
    {
        std::vector<int> count(static_cast<std::size_t>(classes), 0);
        for (int c : color)
            ++count[static_cast<std::size_t>(c)];
        for (int c = 0; c < classes; ++c)
            if (count[static_cast<std::size_t>(c)] > 1) {
                target = c;
                break;
            }
    }
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n; ++v)
        if (color[static_cast<std::size_t>(v)] == target)
            cell.push_back(v);
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
        bool redundant = false;
        for (Vertex u : tried)
            if (swappable(g, u, v)) {
                redundant = true;
                break;
            }
        if (redundant)
            continue;
        tried.push_back(v);
        auto next = color;
        next[static_cast<std::size_t>(v)] = -1;
        canon_search(g, std::move(next), best);
    }
}

} // namespace detail

/// Canonical byte string: order byte followed by the packed upper triangle of
/// the lexicographically least adjacency matrix reachable by the search.
/// Equal certificates <=> isomorphic graphs.
inline std::string certificate(const Graph& g) {
    if (g.order() > kMaxCertificateOrder)
        throw resource_error("certificate supports order <= " +
                             std::to_string(kMaxCertificateOrder));
    std::string best;
    detail::canon_search(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0), best);
    return best;
}

inline std::string certificate_hex(const Graph& g) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : certificate(g)) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return certificate(a) == certificate(b);
}

} // namespace picactus
