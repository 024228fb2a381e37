#pragma once

#include <optional>
#include <vector>

#include "netbound/frame.hpp"
#include "netbound/net_alg.hpp"
#include "netbound/plane_graph.hpp"
#include "netbound/tree_decomposition.hpp"

namespace netbound {

/// Turn the coloring a component inherits from its parent's frame into a
/// frame of its own. Each component vertex inherits the colors of the
/// parent-walk positions it occupies; those positions must form one
/// contiguous arc of the parent walk. Colors absent from the arc are painted
/// onto the newly exposed part of the component's peripheral walk: the
/// vertices off the parent walk, the ends of the inherited stretches, and
/// always every vertex listed in must_color (component-local ids of the
/// vertices adjacent to the cover whose removal created the component — each
/// of them has to carry a color it was just cut off from). Split indices
/// realizing the combined coloring are searched over both traversal
/// directions and all rotations; every vertex keeps at least its inherited
/// and painted colors. Components with no colored vertex get an all-blue
/// frame whose smallest vertex doubles as the red and yellow side. Throws
/// RecolorContradiction when no such frame exists.
Frame3 recolor_child(const Frame3& parent_frame, const SubgraphComponent& child,
                     const std::vector<Vertex>& must_color);
Frame3 recolor_child(const Frame3& parent_frame, const SubgraphComponent& child);

// ═══════════════════════════════════════════════════════════════════════════
// BT-Alg search tree
// ═══════════════════════════════════════════════════════════════════════════

/// One node of the search tree. Vertex sets use the ids of the root graph.
struct SearchNode {
    std::vector<int> id;          // (0) for the root, parent id + child position
    int parent = -1;              // index into BtResult::nodes
    std::vector<Vertex> vertices; // V(G_i), ascending
    std::vector<Vertex> cover;    // C_i, ascending; equals V(G_i) when pruned
    std::vector<int> children;    // node indices
    bool pruned = false;
};

/// Result of the branch-and-bound search: KB is the largest net-cover order
/// encountered, a lower bound on the bramble number; the node covers
/// partition the vertex set and induce a tree decomposition of width at
/// most 4*KB - 1.
struct BtResult {
    int kb = 0;
    std::vector<SearchNode> nodes; // breadth-first order, root first
};

/// Run the search with an explicit root frame.
BtResult bt_alg(const PlaneGraph& g, const Frame3& root_frame);

/// Run the search with the default (thirds) frame.
BtResult bt_alg(const PlaneGraph& g);

// ═══════════════════════════════════════════════════════════════════════════
// Decomposition extraction
// ═══════════════════════════════════════════════════════════════════════════

struct DecompositionResult {
    TreeDecomposition decomposition;
    int kb = 0;
};

/// Bags: for node i, its cover plus every outside vertex adjacent to V(G_i);
/// tree edges follow the search tree. The result is validated before being
/// returned and its width is at most 4*kb - 1.
DecompositionResult build_decomposition(const PlaneGraph& g, const BtResult& bt);

} // namespace netbound
