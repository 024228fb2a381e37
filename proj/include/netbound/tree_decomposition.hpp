#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netbound/plane_graph.hpp"

namespace netbound {

/// A tree decomposition: bags of vertices plus the edges of the tree
/// connecting them (bag indices). Valid iff (1) the tree edges form a tree
/// on the bags, (2) every vertex appears in at least one bag and its bags
/// form a connected subtree, and (3) both endpoints of every graph edge
/// share a bag.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    /// max |bag| - 1.
    int width() const;
};

struct ValidationReport {
    bool ok = true;
    std::string message; // names the violated condition when !ok
};

/// Validate against an arbitrary simple graph given by vertex count and
/// edge list.
ValidationReport validate_tree_decomposition(int vertex_count,
                                             const std::vector<std::pair<Vertex, Vertex>>& edges,
                                             const TreeDecomposition& td);

ValidationReport validate_tree_decomposition(const PlaneGraph& g, const TreeDecomposition& td);

/// Edge list of a plane graph (u < v, lexicographic).
std::vector<std::pair<Vertex, Vertex>> edge_list(const PlaneGraph& g);

} // namespace netbound
