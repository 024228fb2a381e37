// netbound — treewidth bounds for plane graphs via three-sided brambles.
//
// Exit codes: 0 success, 1 failed verification (verify subcommand only),
// 2 bad usage or bad input. All output is deterministic: identical inputs
// produce byte-identical stdout.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "netbound/bt_alg.hpp"
#include "netbound/frame.hpp"
#include "netbound/generators.hpp"
#include "netbound/io.hpp"
#include "netbound/net_alg.hpp"
#include "netbound/oracles.hpp"
#include "netbound/plane_graph.hpp"
#include "netbound/tree_decomposition.hpp"

using nlohmann::json;

namespace {

using namespace netbound;

ParsedGraph read_input(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    return read_graph_file(path);
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
}

/// 1-based id for an original vertex, "f<k>" for the k-th bounded face.
std::string show_vertex(Vertex v, int originals) {
    if (v < originals) return std::to_string(v + 1);
    return "f" + std::to_string(v - originals + 1);
}

std::string show_path(const std::vector<Vertex>& path, int originals) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += ' ';
        s += show_vertex(path[i], originals);
    }
    return s;
}

Frame3 frame_from_option(const PlaneGraph& g, const std::vector<int>& frame) {
    if (frame.empty()) return default_frame(g);
    if (frame.size() != 2) throw BadParameter("--frame needs exactly two positions j,k");
    return make_frame(g, frame[0], frame[1]);
}

// ───────────────────────────────────────────────────────────────────────────
// gen
// ───────────────────────────────────────────────────────────────────────────

int run_gen(const std::string& type, int n, std::uint64_t seed, const std::string& out) {
    PlaneGraph g = [&] {
        if (type == "grid") return make_square_grid(n);
        if (type == "tri") return make_triangular_grid(n);
        if (type == "cycle") return make_cycle(n);
        return make_random_triangulation(n, seed);
    }();
    std::ostringstream os;
    os << "c " << type << " n=" << n;
    if (type == "random") os << " seed=" << seed;
    os << '\n';
    write_graph(os, g);
    write_output(out, os.str());
    return 0;
}

// ───────────────────────────────────────────────────────────────────────────
// net-order
// ───────────────────────────────────────────────────────────────────────────

int run_net_order(const std::string& input, const std::vector<int>& frameOpt, bool asJson) {
    const ParsedGraph pg = read_input(input);
    const auto comps = assemble_components(pg);
    if (comps.size() != 1)
        throw BadParameter("net-order needs a connected graph (input has " +
                           std::to_string(comps.size()) + " components)");
    const PlaneGraph& g = comps[0].graph;
    const Frame3 f = frame_from_option(g, frameOpt);
    const NetCoverResult res = net_alg(g, f);
    const int orig = g.vertex_count();

    if (asJson) {
        json j;
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        j["walk_length"] = f.n();
        j["frame"] = {{"j", f.j()}, {"k", f.k()}};
        j["order"] = res.order;
        json cover = json::array();
        for (Vertex v : res.cover) cover.push_back(v + 1);
        j["cover"] = cover;
        j["center"] = show_vertex(res.witness.center, orig);
        j["path_blue"] = show_path(res.witness.path_blue, orig);
        j["path_red"] = show_path(res.witness.path_red, orig);
        j["path_yellow"] = show_path(res.witness.path_yellow, orig);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "vertices: " << g.vertex_count() << '\n'
              << "edges: " << g.edge_count() << '\n'
              << "walk length: " << f.n() << '\n'
              << "frame: j=" << f.j() << " k=" << f.k() << '\n'
              << "order: " << res.order << '\n'
              << "cover:";
    for (Vertex v : res.cover) std::cout << ' ' << v + 1;
    std::cout << '\n' << "center: " << show_vertex(res.witness.center, orig) << '\n';
    return 0;
}

// ───────────────────────────────────────────────────────────────────────────
// bounds / decompose
// ───────────────────────────────────────────────────────────────────────────

struct ComponentRun {
    const InputComponent* comp = nullptr;
    BtResult bt;
    DecompositionResult dec;
};

std::vector<ComponentRun> run_components(const std::vector<InputComponent>& comps,
                                         const std::vector<int>& frameOpt) {
    if (!frameOpt.empty() && comps.size() != 1)
        throw BadParameter("--frame needs a connected graph");
    std::vector<ComponentRun> runs;
    runs.reserve(comps.size());
    for (const auto& c : comps) {
        ComponentRun r;
        r.comp = &c;
        r.bt = bt_alg(c.graph, frame_from_option(c.graph, frameOpt));
        r.dec = build_decomposition(c.graph, r.bt);
        runs.push_back(std::move(r));
    }
    return runs;
}

int run_bounds(const std::string& input, const std::vector<int>& frameOpt, bool asJson) {
    const ParsedGraph pg = read_input(input);
    const auto comps = assemble_components(pg);
    const auto runs = run_components(comps, frameOpt);

    int kb = 0;
    int width = 0;
    for (const auto& r : runs) {
        kb = std::max(kb, r.bt.kb);
        width = std::max(width, r.dec.decomposition.width());
    }

    if (asJson) {
        json j;
        j["vertices"] = pg.vertex_count();
        j["edges"] = pg.edge_count();
        json cs = json::array();
        for (const auto& r : runs)
            cs.push_back({{"vertices", r.comp->graph.vertex_count()},
                          {"kb", r.bt.kb},
                          {"width", r.dec.decomposition.width()}});
        j["components"] = cs;
        j["kb"] = kb;
        j["bramble_number_lower_bound"] = kb;
        j["treewidth_lower_bound"] = kb - 1;
        j["treewidth_upper_bound"] = width;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "vertices: " << pg.vertex_count() << '\n'
              << "edges: " << pg.edge_count() << '\n'
              << "components: " << runs.size() << '\n';
    for (std::size_t i = 0; i < runs.size(); ++i)
        std::cout << "component " << i + 1 << ": vertices=" << runs[i].comp->graph.vertex_count()
                  << " kb=" << runs[i].bt.kb << " width=" << runs[i].dec.decomposition.width()
                  << '\n';
    std::cout << "kb: " << kb << '\n'
              << "bramble number lower bound: " << kb << '\n'
              << "treewidth lower bound: " << kb - 1 << '\n'
              << "treewidth upper bound: " << width << '\n';
    return 0;
}

/// Stitch per-component decompositions into one tree over the input ids:
/// bag indices are offset per component and each later component's first bag
/// hangs off the first component's first bag.
TreeDecomposition stitch(const std::vector<ComponentRun>& runs) {
    TreeDecomposition td;
    int offset = 0;
    for (const auto& r : runs) {
        const auto& d = r.dec.decomposition;
        for (const auto& bag : d.bags) {
            std::vector<Vertex> mapped;
            mapped.reserve(bag.size());
            for (Vertex v : bag) mapped.push_back(r.comp->to_input[static_cast<std::size_t>(v)]);
            td.bags.push_back(std::move(mapped));
        }
        for (const auto& [a, b] : d.tree_edges) td.tree_edges.push_back({a + offset, b + offset});
        if (offset > 0) td.tree_edges.push_back({0, offset});
        offset += static_cast<int>(d.bags.size());
    }
    return td;
}

int run_decompose(const std::string& input, const std::vector<int>& frameOpt,
                  const std::string& out, bool asJson) {
    const ParsedGraph pg = read_input(input);
    const auto comps = assemble_components(pg);
    const auto runs = run_components(comps, frameOpt);
    const TreeDecomposition td = stitch(runs);

    const ValidationReport rep = validate_tree_decomposition(pg.vertex_count(), pg.edges(), td);
    if (!rep.ok) throw InternalError("stitched decomposition invalid: " + rep.message);

    int kb = 0;
    for (const auto& r : runs) kb = std::max(kb, r.bt.kb);

    if (asJson) {
        json j;
        j["vertices"] = pg.vertex_count();
        j["kb"] = kb;
        j["width"] = td.width();
        json bags = json::array();
        for (const auto& bag : td.bags) {
            json b = json::array();
            for (Vertex v : bag) b.push_back(v + 1);
            bags.push_back(b);
        }
        j["bags"] = bags;
        json edges = json::array();
        for (const auto& [a, b] : td.tree_edges) edges.push_back({a + 1, b + 1});
        j["tree_edges"] = edges;
        write_output(out, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "c kb " << kb << " width " << td.width() << '\n';
    write_decomposition(os, td, pg.vertex_count());
    write_output(out, os.str());
    return 0;
}

// ───────────────────────────────────────────────────────────────────────────
// verify
// ───────────────────────────────────────────────────────────────────────────

int run_verify(const std::string& graphPath, const std::string& tdPath, bool asJson) {
    const ParsedGraph pg = read_input(graphPath);
    const ParsedDecomposition pd =
        tdPath == "-" ? parse_decomposition(std::cin) : read_decomposition_file(tdPath);

    ValidationReport rep;
    if (pd.vertex_count != pg.vertex_count()) {
        rep.ok = false;
        rep.message = "decomposition declares " + std::to_string(pd.vertex_count) +
                      " vertices but the graph has " + std::to_string(pg.vertex_count());
    } else {
        rep = validate_tree_decomposition(pg.vertex_count(), pg.edges(), pd.td);
    }

    if (asJson) {
        json j;
        j["valid"] = rep.ok;
        if (rep.ok)
            j["width"] = pd.td.width();
        else
            j["reason"] = rep.message;
        std::cout << j.dump(2) << '\n';
    } else if (rep.ok) {
        std::cout << "valid: width " << pd.td.width() << '\n';
    } else {
        std::cout << "invalid: " << rep.message << '\n';
    }
    return rep.ok ? 0 : 1;
}

// ───────────────────────────────────────────────────────────────────────────
// oracle
// ───────────────────────────────────────────────────────────────────────────

int run_oracle_net_order(const std::string& input, const std::vector<int>& frameOpt, int limit) {
    const ParsedGraph pg = read_input(input);
    const auto comps = assemble_components(pg);
    if (comps.size() != 1)
        throw BadParameter("oracle net-order needs a connected graph (input has " +
                           std::to_string(comps.size()) + " components)");
    const PlaneGraph& g = comps[0].graph;
    const BruteNetOrder res = brute_net_order(g, frame_from_option(g, frameOpt), limit);
    std::cout << "order: " << res.order << '\n' << "cover:";
    for (Vertex v : res.cover) std::cout << ' ' << v + 1;
    std::cout << '\n';
    return 0;
}

int run_oracle_treewidth(const std::string& input, int limit) {
    const ParsedGraph pg = read_input(input);
    const BruteTreewidth res = brute_treewidth(pg.vertex_count(), pg.edges(), limit);
    std::cout << "treewidth: " << res.treewidth << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"treewidth bounds for plane graphs via three-sided brambles"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a plane graph (.pgr)");
    std::string genType;
    int genN = 0;
    std::uint64_t genSeed = 1;
    std::string genOut = "-";
    gen->add_option("-t,--type", genType, "graph family")
        ->required()
        ->check(CLI::IsMember({"grid", "tri", "cycle", "random"}));
    gen->add_option("-n,--size", genN, "size parameter (side length / cycle length / vertices)")
        ->required();
    gen->add_option("--seed", genSeed, "random seed (random type only)");
    gen->add_option("-o,--out", genOut, "output file, - for stdout");

    const auto addFrame = [](CLI::App* sub, std::vector<int>& frame) {
        sub->add_option("--frame", frame,
                        "frame split positions j,k on the peripheral walk (0-based)")
            ->delimiter(',');
    };

    // net-order
    auto* netOrder = app.add_subcommand("net-order", "minimum net cover of a connected plane graph");
    std::string noInput;
    std::vector<int> noFrame;
    bool noJson = false;
    netOrder->add_option("input", noInput, ".pgr file, - for stdin")->required();
    addFrame(netOrder, noFrame);
    netOrder->add_flag("--json", noJson, "JSON output");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "treewidth lower and upper bounds");
    std::string bInput;
    std::vector<int> bFrame;
    bool bJson = false;
    bounds->add_option("input", bInput, ".pgr file, - for stdin")->required();
    addFrame(bounds, bFrame);
    bounds->add_flag("--json", bJson, "JSON output");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "compute a tree decomposition (.td)");
    std::string dInput;
    std::vector<int> dFrame;
    std::string dOut = "-";
    bool dJson = false;
    decompose->add_option("input", dInput, ".pgr file, - for stdin")->required();
    addFrame(decompose, dFrame);
    decompose->add_option("-o,--out", dOut, "output file, - for stdout");
    decompose->add_flag("--json", dJson, "JSON output");

    // verify
    auto* verify = app.add_subcommand("verify", "validate a tree decomposition against a graph");
    std::string vGraph, vTd;
    bool vJson = false;
    verify->add_option("graph", vGraph, ".pgr file")->required();
    verify->add_option("decomposition", vTd, ".td file, - for stdin")->required();
    verify->add_flag("--json", vJson, "JSON output");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive reference algorithms (small graphs)");
    oracle->require_subcommand(1);
    auto* oNet = oracle->add_subcommand("net-order", "minimum net cover by exhaustive search");
    std::string onInput;
    std::vector<int> onFrame;
    int onLimit = 12;
    oNet->add_option("input", onInput, ".pgr file, - for stdin")->required();
    addFrame(oNet, onFrame);
    oNet->add_option("--limit", onLimit, "vertex-count limit");
    auto* oTw = oracle->add_subcommand("treewidth", "exact treewidth by dynamic programming");
    std::string otInput;
    int otLimit = 15;
    oTw->add_option("input", otInput, ".pgr file, - for stdin")->required();
    oTw->add_option("--limit", otLimit, "vertex-count limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(genType, genN, genSeed, genOut);
        if (netOrder->parsed()) return run_net_order(noInput, noFrame, noJson);
        if (bounds->parsed()) return run_bounds(bInput, bFrame, bJson);
        if (decompose->parsed()) return run_decompose(dInput, dFrame, dOut, dJson);
        if (verify->parsed()) return run_verify(vGraph, vTd, vJson);
        if (oracle->parsed()) {
            if (oNet->parsed()) return run_oracle_net_order(onInput, onFrame, onLimit);
            if (oTw->parsed()) return run_oracle_treewidth(otInput, otLimit);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
