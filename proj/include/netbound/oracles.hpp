#pragma once

#include <utility>
#include <vector>

#include "netbound/frame.hpp"
#include "netbound/plane_graph.hpp"
#include "netbound/tree_decomposition.hpp"

namespace netbound {

/// Exhaustive-enumeration reference implementations. They share nothing with
/// the polynomial algorithms — vines come from subset enumeration, covers
/// from hitting-set search, treewidth from the elimination-ordering dynamic
/// program — so agreement between the two sides is meaningful evidence.

struct BruteNetOrder {
    int order = 0;
    std::vector<Vertex> cover; // lexicographically smallest optimal cover
};

/// Minimum net cover by exhaustive search: enumerate all vines, reduce to
/// the inclusion-minimal ones, then find the smallest vertex set hitting all
/// of them (subsets tried in size order, lexicographic within a size).
/// Throws TooLarge beyond `limit` vertices.
BruteNetOrder brute_net_order(const PlaneGraph& g, const Frame3& f, int limit = 12);

/// All inclusion-minimal vines of (g, f), each ascending, ordered
/// lexicographically.
std::vector<std::vector<Vertex>> minimal_vines(const PlaneGraph& g, const Frame3& f,
                                               int limit = 12);

struct BruteTreewidth {
    int treewidth = 0;
    TreeDecomposition decomposition;
};

/// Exact treewidth of an arbitrary simple graph via the subset dynamic
/// program over elimination orderings, plus a witness decomposition built
/// from the optimal ordering. Throws TooLarge beyond `limit` vertices.
BruteTreewidth brute_treewidth(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                               int limit = 15);

BruteTreewidth brute_treewidth(const PlaneGraph& g, int limit = 15);

/// Check, for every vertex set C of g up to size `max_cover_size`, that C
/// covers the net of (g, f) exactly when some connected subgraph of the face
/// graph restricted to C-and-face-vertices still meets all three sides —
/// the equivalence the fast cover algorithm is built on. Returns true iff no
/// counterexample exists.
bool check_min_cover_theorem(const PlaneGraph& g, const Frame3& f, int max_cover_size = 4,
                             int limit = 10);

} // namespace netbound
