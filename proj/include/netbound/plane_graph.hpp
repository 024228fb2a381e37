#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "netbound/errors.hpp"

namespace netbound {

/// Vertices are dense 0-based ids.
using Vertex = int;

/// A directed edge (u, v) of an embedded graph.
using Arc = std::pair<Vertex, Vertex>;

// ═══════════════════════════════════════════════════════════════════════════
// FaceWalk
// ═══════════════════════════════════════════════════════════════════════════

/// A closed facial walk of a plane graph. For a face with at least one edge
/// the walk is stored explicitly closed: verts.front() == verts.back() and
/// length() is the number of edge traversals. For the single face of an
/// edgeless one-vertex graph the walk is just that vertex and length() == 0.
/// Vertices (and edges, once per direction) may repeat: a cut vertex appears
/// once per incidence of the face.
struct FaceWalk {
    std::vector<Vertex> verts;

    /// Number of edge traversals (u_0, ..., u_length with u_0 == u_length).
    int length() const { return static_cast<int>(verts.size()) - 1; }

    /// Walk vertex u_i, 0 <= i <= length().
    Vertex at(int i) const {
        if (i < 0 || i >= static_cast<int>(verts.size()))
            throw IndexOutOfRange("walk index " + std::to_string(i) + " out of range");
        return verts[static_cast<std::size_t>(i)];
    }

    /// Distinct vertices of the walk, ascending.
    std::vector<Vertex> distinct_vertices() const;

    bool operator==(const FaceWalk&) const = default;
};

// ═══════════════════════════════════════════════════════════════════════════
// PlaneGraph
// ═══════════════════════════════════════════════════════════════════════════

/// A nonempty, connected, simple graph with a fixed planar embedding, given
/// as a rotation system: for every vertex the cyclic counterclockwise order
/// of its neighbors. One face is designated as the unbounded (outer) face by
/// an anchor arc (u, v): the face traced from that arc — with the convention
/// that each face keeps its region to the right of the traversal — is the
/// outer one, so the outer walk runs counterclockwise around the graph.
///
/// Construction validates everything: simplicity, symmetry of the rotation
/// system, connectivity, and that the embedding is actually planar (Euler's
/// relation v - e + f = 2 for the traced faces).
///
/// Instances are immutable after construction; all faces are traced eagerly.
class PlaneGraph {
public:
    /// Build from rotations plus an explicit outer-face anchor arc.
    PlaneGraph(std::vector<std::vector<Vertex>> rotation, Arc outer_anchor);

    /// Build from rotations alone; the outer face is chosen deterministically
    /// (see with_outer_containing with an empty requirement).
    explicit PlaneGraph(std::vector<std::vector<Vertex>> rotation);

    /// Build from rotations, choosing as outer face a face whose walk visits
    /// every vertex of `required`. If several faces qualify, the longest walk
    /// wins, then the lexicographically smallest walk sequence. Throws
    /// EmbeddingInvalid if no face qualifies.
    static PlaneGraph with_outer_containing(std::vector<std::vector<Vertex>> rotation,
                                            const std::vector<Vertex>& required);

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int edge_count() const { return edge_count_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    /// Counterclockwise neighbor order of v.
    const std::vector<Vertex>& rotation(Vertex v) const {
        check_vertex(v);
        return rot_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(rotation(v).size()); }

    bool has_edge(Vertex u, Vertex v) const;

    /// All facial walks; faces()[0] is always the unbounded face.
    const std::vector<FaceWalk>& faces() const { return faces_; }

    /// The walk of the unbounded face, starting at the anchor arc. This is
    /// the peripheral walk that frames are laid out on.
    const FaceWalk& peripheral_walk() const { return faces_.front(); }

    /// The anchor arc (first arc of the peripheral walk). Requires at least
    /// one edge.
    Arc anchor() const;

    bool operator==(const PlaneGraph& other) const {
        return rot_ == other.rot_ && anchor_ == other.anchor_;
    }

private:
    PlaneGraph() = default;
    void init(std::vector<std::vector<Vertex>> rotation,
              std::optional<Arc> anchor,
              const std::vector<Vertex>* required_outer);
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= vertex_count())
            throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::vector<Vertex>> rot_;
    std::vector<std::vector<Vertex>> sorted_adj_;
    std::vector<FaceWalk> faces_;
    std::optional<Arc> anchor_;
    int edge_count_ = 0;
};

// ═══════════════════════════════════════════════════════════════════════════
// Face graph
// ═══════════════════════════════════════════════════════════════════════════

/// The face graph of a plane graph G: G plus one new vertex per bounded face,
/// embedded inside that face and joined to each distinct vertex of its walk.
/// New vertices get ids n, n+1, ... in face order, so `is_original` is a
/// plain id comparison.
struct FaceGraph {
    PlaneGraph graph;
    int original_count = 0;
    /// source_face[v - original_count] = index into the source graph's
    /// faces() for face vertex v.
    std::vector<int> source_face;

    bool is_original(Vertex v) const { return v < original_count; }
};

FaceGraph build_face_graph(const PlaneGraph& g);

// ═══════════════════════════════════════════════════════════════════════════
// Induced subgraphs
// ═══════════════════════════════════════════════════════════════════════════

/// One connected component of an induced subgraph, re-indexed with dense
/// local ids. to_parent is strictly increasing, so local id order equals
/// parent id order.
struct SubgraphComponent {
    PlaneGraph graph;
    std::vector<Vertex> to_parent;
};

/// Induce g on `vertices` (nonempty, duplicate-free) and split the result
/// into connected components, ordered by smallest parent id. Each component
/// inherits the embedding; its outer face is chosen as a face covering all
/// component vertices that either lie on g's peripheral walk or lost a
/// neighbor of g (both kinds stay on the boundary when a plane graph is cut
/// along deleted vertices), with the deterministic tie-break of
/// PlaneGraph::with_outer_containing.
std::vector<SubgraphComponent> induced_subgraph(const PlaneGraph& g,
                                                const std::vector<Vertex>& vertices);

} // namespace netbound
