#pragma once

#include <cstdint>
#include <optional>

#include "picactus/canonical.hpp"
#include "picactus/indices.hpp"
#include "picactus/structure.hpp"

namespace picactus {

enum class Direction { max, min };

namespace detail {

// Valid pendant counts: the usual 0 <= k <= n-1 band, plus the two degenerate
// shapes K1 (0 pendants) and K2 (both endpoints pendant, so k = 2 = n).
inline void check_extremal_query(int n, int k) {
    if (n == 1 && k == 0)
        return;
    if (n == 2 && k == 2)
        return;
    if (n >= 2 && k >= 0 && k <= n - 1)
        return;
    throw input_error("no cactus family with n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
}

} // namespace detail

/// Largest vertex PI over the family with n vertices and k pendants
/// (excluding the four special small graphs): (n-1+floor((n-k-1)/3))(n-2).
inline std::int64_t pi_upper_bound(int n, int k) {
    detail::check_extremal_query(n, k);
    if (n <= 2)
        return 0;
    return static_cast<std::int64_t>(n - 1 + (n - k - 1) / 3) * (n - 2);
}

/// Smallest vertex PI over the same family (minus its own exclusions):
/// (n-1)(n-2) - 2*floor((n-k-1)/2).
inline std::int64_t pi_lower_bound(int n, int k) {
    detail::check_extremal_query(n, k);
    if (n <= 2)
        return 0;
    return static_cast<std::int64_t>(n - 1) * (n - 2) -
           2 * static_cast<std::int64_t>((n - k - 1) / 2);
}

/// Witness attaining pi_upper_bound, when one exists: q = floor((n-k-1)/3)
/// four-cycles at a hub, pendant machinery absorbing the residue r. Returns
/// nothing where the bound value is not attained by any cactus in the family.
inline std::optional<Graph> construct_max(int n, int k) {
    detail::check_extremal_query(n, k);
    if (n == 1)
        return single_vertex();
    if (n == 2)
        return k == 2 ? std::optional<Graph>(path_graph(2)) : std::nullopt;

    const int d = n - k - 1;
    const int q = d / 3, r = d % 3;
    GraphBuilder b;
    Vertex hub = b.add_vertex();
    if (k == 0) {
        if (r == 0) {
            for (int i = 0; i < q; ++i)
                b.add_cycle(hub, 4);
        } else if (r == 1) {
            // the residue only fits as a bridge between two cycle groups
            if (q < 2)
                return std::nullopt;
            for (int i = 0; i < q - 1; ++i)
                b.add_cycle(hub, 4);
            b.add_cycle(b.add_path(hub, 1), 4);
        } else {
            // one six-cycle absorbs both residual vertices
            if (q < 1)
                return std::nullopt;
            for (int i = 0; i < q - 1; ++i)
                b.add_cycle(hub, 4);
            b.add_cycle(hub, 6);
        }
    } else {
        // a lone pendant path would make the hub itself pendant
        if (q == 0 && k == 1)
            return std::nullopt;
        for (int i = 0; i < q; ++i)
            b.add_cycle(hub, 4);
        for (int i = 0; i < k - 1; ++i)
            b.add_path(hub, 1);
        b.add_path(hub, 1 + r);
    }
    return b.build();
}

/// Witness attaining pi_lower_bound, when one exists: floor((n-k-1)/2)
/// triangles at a hub, mirrored residue handling.
inline std::optional<Graph> construct_min(int n, int k) {
    detail::check_extremal_query(n, k);
    if (n == 1)
        return single_vertex();
    if (n == 2)
        return k == 2 ? std::optional<Graph>(path_graph(2)) : std::nullopt;

    const int d = n - k - 1;
    const int q = d / 2, r = d % 2;
    GraphBuilder b;
    Vertex hub = b.add_vertex();
    if (k == 0) {
        if (r == 0) {
            for (int i = 0; i < q; ++i)
                b.add_cycle(hub, 3);
        } else {
            if (q < 2)
                return std::nullopt;
            for (int i = 0; i < q - 1; ++i)
                b.add_cycle(hub, 3);
            b.add_cycle(b.add_path(hub, 1), 3);
        }
    } else {
        if (q == 0 && k == 1)
            return std::nullopt;
        for (int i = 0; i < q; ++i)
            b.add_cycle(hub, 3);
        for (int i = 0; i < k - 1; ++i)
            b.add_path(hub, 1);
        b.add_path(hub, 1 + r);
    }
    return b.build();
}

/// The theorems' statements carve four small graphs out of the candidate
/// families; max drops {C3, C3+e, C4, C5}, min drops {C3, C3+e, C4}.
inline bool is_excluded(const Graph& g, Direction direction) {
    if (g.order() > 5)
        return false;
    if (are_isomorphic(g, cycle_graph(3)) || are_isomorphic(g, triangle_with_pendant()) ||
        are_isomorphic(g, cycle_graph(4)))
        return true;
    return direction == Direction::max && are_isomorphic(g, cycle_graph(5));
}

/// Shape test for extremal families. Max: all cycles C4 with at most k+2 cut
/// edges, or all C4 except one C6 with exactly k cut edges, all pendant. Min:
/// all triangles with at most k+1 cut edges. Trees land in the first clause
/// exactly when the respective tree regime applies (cut count n-1 vs k+2/k+1).
inline bool matches_characterization(const CactusProfile& p, Direction direction) {
    const int k = p.pendant_count;
    if (direction == Direction::min)
        return p.all_cycles_of_length(3) && p.cut_edge_count <= k + 1;
    if (p.all_cycles_of_length(4) && p.cut_edge_count <= k + 2)
        return true;
    int sixes = 0, fours = 0;
    for (int c : p.cycle_lengths) {
        if (c == 4)
            ++fours;
        else if (c == 6)
            ++sixes;
        else
            return false;
    }
    // cut == pendant count forces every cut edge to be a pendant edge
    return sixes == 1 && p.cut_edge_count == k;
}

} // namespace picactus
