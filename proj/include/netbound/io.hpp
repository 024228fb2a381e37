#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netbound/plane_graph.hpp"
#include "netbound/tree_decomposition.hpp"

namespace netbound {

/// Embedded graph file (.pgr). Line-oriented, 1-based vertex ids:
///   c <comment>                 anywhere
///   p pgr <vertices> <edges>    exactly once, before r/o lines
///   r <v> <u1> <u2> ...         counterclockwise rotation of v (one per vertex)
///   o <u> <v>                   outer-face anchor arc (optional, at most once)
/// The graph may be disconnected at file level; callers split it into
/// components before building PlaneGraphs.
struct ParsedGraph {
    std::vector<std::vector<Vertex>> rotation; // 0-based in memory
    std::optional<Arc> anchor;

    int vertex_count() const { return static_cast<int>(rotation.size()); }
    int edge_count() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;
};

ParsedGraph parse_graph(std::istream& in);
ParsedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const PlaneGraph& g);
ParsedGraph to_parsed(const PlaneGraph& g);
void write_parsed_graph(std::ostream& out, const ParsedGraph& g);

/// One connected component of a parsed graph; to_input maps local ids back
/// to the file's 0-based ids. The component containing the anchor keeps it;
/// the others pick their outer face deterministically.
struct InputComponent {
    PlaneGraph graph;
    std::vector<Vertex> to_input;
};

std::vector<InputComponent> assemble_components(const ParsedGraph& pg);

/// Tree decomposition file (.td), PACE style, 1-based ids:
///   c <comment>
///   s td <bags> <max-bag-size> <vertices>
///   b <bag-id> <v1> <v2> ...
///   <bag-id> <bag-id>            one line per tree edge
struct ParsedDecomposition {
    int vertex_count = 0;
    TreeDecomposition td;
};

ParsedDecomposition parse_decomposition(std::istream& in);
ParsedDecomposition read_decomposition_file(const std::string& path);
void write_decomposition(std::ostream& out, const TreeDecomposition& td, int vertex_count);

} // namespace netbound
