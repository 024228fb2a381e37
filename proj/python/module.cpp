#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "netbound/bt_alg.hpp"
#include "netbound/errors.hpp"
#include "netbound/frame.hpp"
#include "netbound/generators.hpp"
#include "netbound/io.hpp"
#include "netbound/net_alg.hpp"
#include "netbound/oracles.hpp"
#include "netbound/tree_decomposition.hpp"

namespace py = pybind11;
using namespace netbound;

namespace {

py::tuple color_names(ColorMask m) {
    py::list out;
    for (int c = 0; c < 3; ++c)
        if (m & color_bit(static_cast<SideColor>(c))) out.append(color_name(static_cast<SideColor>(c)));
    return py::tuple(out);
}

SideColor color_from_name(const std::string& name) {
    for (int c = 0; c < 3; ++c)
        if (name == color_name(static_cast<SideColor>(c))) return static_cast<SideColor>(c);
    throw BadParameter("unknown color '" + name + "' (use blue, red or yellow)");
}

TreeDecomposition make_td(std::vector<std::vector<Vertex>> bags,
                          std::vector<std::pair<int, int>> tree_edges) {
    TreeDecomposition td;
    td.bags = std::move(bags);
    td.tree_edges = std::move(tree_edges);
    return td;
}

} // namespace

PYBIND11_MODULE(_netbound, m) {
    m.doc() = "treewidth bounds for plane graphs via three-sided brambles";

    py::register_exception<Error>(m, "Error");

    py::class_<PlaneGraph>(m, "Graph", "connected plane graph given as a rotation system")
        .def(py::init([](std::vector<std::vector<Vertex>> rotations,
                         std::optional<std::pair<Vertex, Vertex>> anchor) {
                 if (anchor) return PlaneGraph(std::move(rotations), Arc{anchor->first, anchor->second});
                 return PlaneGraph(std::move(rotations));
             }),
             py::arg("rotations"), py::arg("anchor") = std::nullopt,
             "build from counterclockwise neighbor lists; the optional anchor arc (u, v) "
             "marks the face to its left as the outer face")
        .def_property_readonly("vertex_count", &PlaneGraph::vertex_count)
        .def_property_readonly("edge_count", &PlaneGraph::edge_count)
        .def("rotation", &PlaneGraph::rotation, py::arg("v"),
             "counterclockwise neighbors of v")
        .def("degree", &PlaneGraph::degree, py::arg("v"))
        .def("edges", [](const PlaneGraph& g) { return edge_list(g); },
             "sorted edge list with u < v")
        .def("peripheral_walk", [](const PlaneGraph& g) { return g.peripheral_walk().verts; },
             "closed walk around the outer face (first vertex repeated at the end)")
        .def("__repr__", [](const PlaneGraph& g) {
            return "Graph(vertices=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Frame3>(m, "Frame",
                       "peripheral walk split at positions j and k into blue, red and yellow sides")
        .def_property_readonly("j", &Frame3::j)
        .def_property_readonly("k", &Frame3::k)
        .def_property_readonly("length", &Frame3::n)
        .def("walk", [](const Frame3& f) { return f.walk().verts; })
        .def("colors_of", [](const Frame3& f, Vertex v) { return color_names(f.colors_of(v)); },
             py::arg("v"), "side names of v, in blue/red/yellow order")
        .def("side", [](const Frame3& f, const std::string& color) {
                 return f.side_vertices(color_from_name(color));
             },
             py::arg("color"), "sorted vertices of one side")
        .def("__repr__", [](const Frame3& f) {
            return "Frame(j=" + std::to_string(f.j()) + ", k=" + std::to_string(f.k()) +
                   ", length=" + std::to_string(f.n()) + ")";
        });

    // ── generators ──────────────────────────────────────────────────────────
    m.def("square_grid", &make_square_grid, py::arg("n"), "n-by-n square grid");
    m.def("triangular_grid", &make_triangular_grid, py::arg("n"),
          "triangular grid with n vertices per side");
    m.def("cycle", &make_cycle, py::arg("n"), "n-cycle");
    m.def("random_triangulation", &make_random_triangulation, py::arg("n"), py::arg("seed"),
          "stacked planar triangulation, deterministic per seed");

    // ── frames and net covers ───────────────────────────────────────────────
    m.def("frame", &make_frame, py::arg("g"), py::arg("j"), py::arg("k"),
          "frame on g's peripheral walk with splits 0 <= j <= k <= walk length");
    m.def("default_frame", &default_frame, py::arg("g"),
          "frame splitting the peripheral walk into thirds");
    m.def("net_cover", [](const PlaneGraph& g, const Frame3& f) {
              const NetCoverResult r = net_alg(g, f);
              py::dict d;
              d["order"] = r.order;
              d["cover"] = r.cover;
              return d;
          },
          py::arg("g"), py::arg("frame"),
          "minimum cover of the net (all sets meeting the frame's three sides)");
    m.def("verify_cover", &verify_cover, py::arg("g"), py::arg("frame"), py::arg("cover"),
          "does the vertex set meet every vine of (g, frame)?");

    // ── bounds and decompositions ───────────────────────────────────────────
    m.def("bounds", [](const PlaneGraph& g) {
              const BtResult bt = bt_alg(g);
              const DecompositionResult dec = build_decomposition(g, bt);
              py::dict d;
              d["kb"] = bt.kb;
              d["bramble_lower"] = bt.kb;
              d["treewidth_lower"] = bt.kb - 1;
              d["treewidth_upper"] = dec.decomposition.width();
              return d;
          },
          py::arg("g"), "lower and upper treewidth bounds from the recursive net search");
    m.def("decompose", [](const PlaneGraph& g) {
              const DecompositionResult dec = build_decomposition(g, bt_alg(g));
              py::dict d;
              d["kb"] = dec.kb;
              d["width"] = dec.decomposition.width();
              d["bags"] = dec.decomposition.bags;
              d["tree_edges"] = dec.decomposition.tree_edges;
              return d;
          },
          py::arg("g"), "tree decomposition of width at most 4*kb - 1");
    m.def("validate_decomposition", [](const PlaneGraph& g, std::vector<std::vector<Vertex>> bags,
                                       std::vector<std::pair<int, int>> tree_edges) {
              const ValidationReport rep =
                  validate_tree_decomposition(g, make_td(std::move(bags), std::move(tree_edges)));
              return py::make_tuple(rep.ok, rep.message);
          },
          py::arg("g"), py::arg("bags"), py::arg("tree_edges"),
          "(ok, message) for the tree decomposition axioms");

    // ── exhaustive oracles (small graphs) ───────────────────────────────────
    m.def("brute_net_order", [](const PlaneGraph& g, const Frame3& f, int limit) {
              const BruteNetOrder r = brute_net_order(g, f, limit);
              py::dict d;
              d["order"] = r.order;
              d["cover"] = r.cover;
              return d;
          },
          py::arg("g"), py::arg("frame"), py::arg("limit") = 12,
          "minimum net cover by vine enumeration and hitting-set search");
    m.def("brute_treewidth", [](const PlaneGraph& g, int limit) {
              return brute_treewidth(g, limit).treewidth;
          },
          py::arg("g"), py::arg("limit") = 15,
          "exact treewidth by the elimination-ordering dynamic program");

    // ── file formats ────────────────────────────────────────────────────────
    m.def("to_pgr", [](const PlaneGraph& g) {
              std::ostringstream out;
              write_graph(out, g);
              return out.str();
          },
          py::arg("g"), "serialize as a .pgr file");
    m.def("from_pgr", [](const std::string& text) {
              std::istringstream in(text);
              py::list out;
              for (auto& c : assemble_components(parse_graph(in)))
                  out.append(py::make_tuple(std::move(c.graph), std::move(c.to_input)));
              return out;
          },
          py::arg("text"),
          "parse a .pgr file into (graph, original_ids) pairs, one per connected component");
    m.def("to_td", [](std::vector<std::vector<Vertex>> bags,
                      std::vector<std::pair<int, int>> tree_edges, int vertex_count) {
              std::ostringstream out;
              write_decomposition(out, make_td(std::move(bags), std::move(tree_edges)), vertex_count);
              return out.str();
          },
          py::arg("bags"), py::arg("tree_edges"), py::arg("vertex_count"),
          "serialize a tree decomposition as a .td file");
    m.def("from_td", [](const std::string& text) {
              std::istringstream in(text);
              const ParsedDecomposition pd = parse_decomposition(in);
              py::dict d;
              d["vertex_count"] = pd.vertex_count;
              d["bags"] = pd.td.bags;
              d["tree_edges"] = pd.td.tree_edges;
              d["width"] = pd.td.width();
              return d;
          },
          py::arg("text"), "parse a .td file");
}
