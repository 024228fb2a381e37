#pragma once

#include <cstdint>
#include <vector>

#include "netbound/frame.hpp"
#include "netbound/plane_graph.hpp"

namespace netbound {

// ═══════════════════════════════════════════════════════════════════════════
// 0/1-weighted digraph over a face graph
// ═══════════════════════════════════════════════════════════════════════════

/// Bidirected view of a face graph where the arc (u, v) costs 1 if v is an
/// original vertex and 0 if v is a face vertex. The cost of a path is then
/// the number of original vertices on it, not counting its start.
struct WeightedDigraph {
    int vertex_count = 0;
    std::vector<int> offsets;         // CSR: arcs of v are [offsets[v], offsets[v+1])
    std::vector<Vertex> heads;
    std::vector<std::uint8_t> weights;

    static WeightedDigraph from_face_graph(const FaceGraph& fg);
    /// All arcs cost 1 (plain graph distances counting traversed vertices).
    static WeightedDigraph from_plane_graph(const PlaneGraph& g);
};

/// Distances (and shortest-path tree) from one source.
struct DistanceRow {
    Vertex source = 0;
    std::vector<int> dist;      // -1 = unreachable (cannot happen on connected inputs)
    std::vector<Vertex> parent; // smallest-id predecessor on a shortest path; -1 at the source
};

/// 0/1-BFS. Parents are normalized after the search: parent[v] is the
/// smallest u with dist[u] + w(u, v) == dist[v], making shortest-path trees
/// independent of queue order.
DistanceRow sssp_01(const WeightedDigraph& d, Vertex source);

// ═══════════════════════════════════════════════════════════════════════════
// Net-Alg
// ═══════════════════════════════════════════════════════════════════════════

/// Witness for a minimum net cover: a vertex `center` of the face graph and
/// three shortest paths from it (center first) to the blue, red and yellow
/// sides. The union Y of the three paths induces a connected subgraph of the
/// face graph meeting all three sides, and Y's original vertices form a
/// minimum cover of the net.
struct VineTree {
    Vertex center = 0;
    std::vector<Vertex> path_blue;
    std::vector<Vertex> path_red;
    std::vector<Vertex> path_yellow;
    /// Number of original vertices in the union of the paths (= cover size).
    int cost = 0;

    /// Sorted union of the three paths (face-graph vertex ids).
    std::vector<Vertex> union_vertices() const;
};

struct NetCoverResult {
    int order = 0;              // minimum number of vertices meeting every vine
    std::vector<Vertex> cover;  // an optimal cover, ascending
    VineTree witness;
};

/// Minimum net cover of (g, f) via shortest paths in the face graph:
/// for every face-graph vertex i, d(i) = b(i) + r(i) + y(i) + [i original],
/// where b/r/y are cheapest path costs from i to the three sides; the
/// minimizer (first strict improvement, ids ascending) is the center. Runs
/// one 0/1-BFS per face-graph vertex.
NetCoverResult net_alg(const PlaneGraph& g, const Frame3& f);

} // namespace netbound
