#include "netbound/io.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace netbound {

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& why) {
    throw ParseError("line " + std::to_string(lineno) + ": " + why);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& t, int lineno, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        bad_line(lineno, std::string("expected an integer for ") + what + ", got '" + t + "'");
    }
}

} // namespace

int ParsedGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& r : rotation) deg += r.size();
    return static_cast<int>(deg / 2);
}

std::vector<std::pair<Vertex, Vertex>> ParsedGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
        for (Vertex u : rotation[static_cast<std::size_t>(v)])
            if (v < u) out.push_back({v, u});
    std::sort(out.begin(), out.end());
    return out;
}

ParsedGraph parse_graph(std::istream& in) {
    ParsedGraph pg;
    std::vector<char> haveRotation;
    int declaredEdges = -1;
    bool haveHeader = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (haveHeader) bad_line(lineno, "duplicate p line");
            if (t.size() != 4 || t[1] != "pgr") bad_line(lineno, "expected 'p pgr <vertices> <edges>'");
            const int n = parse_int(t[2], lineno, "vertex count");
            declaredEdges = parse_int(t[3], lineno, "edge count");
            if (n < 1) bad_line(lineno, "vertex count must be positive");
            if (declaredEdges < 0) bad_line(lineno, "edge count must be nonnegative");
            pg.rotation.assign(static_cast<std::size_t>(n), {});
            haveRotation.assign(static_cast<std::size_t>(n), 0);
            haveHeader = true;
            continue;
        }
        if (!haveHeader) bad_line(lineno, "'" + t[0] + "' line before the p line");
        if (t[0] == "r") {
            if (t.size() < 2) bad_line(lineno, "r line needs a vertex id");
            const int v = parse_int(t[1], lineno, "vertex id") - 1;
            if (v < 0 || v >= pg.vertex_count()) bad_line(lineno, "vertex id out of range");
            if (haveRotation[static_cast<std::size_t>(v)])
                bad_line(lineno, "duplicate rotation for vertex " + std::to_string(v + 1));
            haveRotation[static_cast<std::size_t>(v)] = 1;
            for (std::size_t i = 2; i < t.size(); ++i) {
                const int u = parse_int(t[i], lineno, "neighbor id") - 1;
                if (u < 0 || u >= pg.vertex_count()) bad_line(lineno, "neighbor id out of range");
                pg.rotation[static_cast<std::size_t>(v)].push_back(u);
            }
            continue;
        }
        if (t[0] == "o") {
            if (pg.anchor) bad_line(lineno, "duplicate o line");
            if (t.size() != 3) bad_line(lineno, "expected 'o <u> <v>'");
            const int u = parse_int(t[1], lineno, "anchor tail") - 1;
            const int v = parse_int(t[2], lineno, "anchor head") - 1;
            if (u < 0 || u >= pg.vertex_count() || v < 0 || v >= pg.vertex_count())
                bad_line(lineno, "anchor id out of range");
            pg.anchor = Arc{u, v};
            continue;
        }
        bad_line(lineno, "unknown line type '" + t[0] + "'");
    }
    if (!haveHeader) throw ParseError("missing p line");
    for (Vertex v = 0; v < pg.vertex_count(); ++v)
        if (!haveRotation[static_cast<std::size_t>(v)])
            throw ParseError("no rotation line for vertex " + std::to_string(v + 1));
    if (pg.edge_count() != declaredEdges)
        throw ParseError("p line declares " + std::to_string(declaredEdges) + " edges but rotations give " +
                         std::to_string(pg.edge_count()));
    return pg;
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_graph(in);
}

void write_parsed_graph(std::ostream& out, const ParsedGraph& g) {
    out << "p pgr " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "r " << v + 1;
        for (Vertex u : g.rotation[static_cast<std::size_t>(v)]) out << ' ' << u + 1;
        out << '\n';
    }
    if (g.anchor) out << "o " << g.anchor->first + 1 << ' ' << g.anchor->second + 1 << '\n';
}

ParsedGraph to_parsed(const PlaneGraph& g) {
    ParsedGraph pg;
    pg.rotation.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) pg.rotation.push_back(g.rotation(v));
    if (g.edge_count() > 0) pg.anchor = g.anchor();
    return pg;
}

void write_graph(std::ostream& out, const PlaneGraph& g) { write_parsed_graph(out, to_parsed(g)); }

std::vector<InputComponent> assemble_components(const ParsedGraph& pg) {
    const int n = pg.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int compCount = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::queue<Vertex> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = compCount;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex u : pg.rotation[static_cast<std::size_t>(v)])
                if (u >= 0 && u < n && comp[static_cast<std::size_t>(u)] == -1) {
                    comp[static_cast<std::size_t>(u)] = compCount;
                    q.push(u);
                }
        }
        ++compCount;
    }

    std::vector<InputComponent> out;
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < compCount; ++c) {
        std::vector<Vertex> members;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            local[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;
        std::vector<std::vector<Vertex>> rot(members.size());
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            for (Vertex u : pg.rotation[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])])
                rot[static_cast<std::size_t>(i)].push_back(local[static_cast<std::size_t>(u)]);
        if (pg.anchor && comp[static_cast<std::size_t>(pg.anchor->first)] == c) {
            const Arc a{local[static_cast<std::size_t>(pg.anchor->first)],
                        local[static_cast<std::size_t>(pg.anchor->second)]};
            out.push_back(InputComponent{PlaneGraph(std::move(rot), a), std::move(members)});
        } else {
            out.push_back(InputComponent{PlaneGraph(std::move(rot)), std::move(members)});
        }
    }
    return out;
}

// ═══════════════════════════════════════════════════════════════════════════
// Tree decomposition files
// ═══════════════════════════════════════════════════════════════════════════

ParsedDecomposition parse_decomposition(std::istream& in) {
    ParsedDecomposition pd;
    bool haveHeader = false;
    int declaredBags = 0;
    int declaredMaxBag = 0;
    std::vector<char> haveBag;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "s") {
            if (haveHeader) bad_line(lineno, "duplicate s line");
            if (t.size() != 5 || t[1] != "td") bad_line(lineno, "expected 's td <bags> <max-bag-size> <vertices>'");
            declaredBags = parse_int(t[2], lineno, "bag count");
            declaredMaxBag = parse_int(t[3], lineno, "max bag size");
            pd.vertex_count = parse_int(t[4], lineno, "vertex count");
            if (declaredBags < 1 || pd.vertex_count < 1) bad_line(lineno, "counts must be positive");
            pd.td.bags.assign(static_cast<std::size_t>(declaredBags), {});
            haveBag.assign(static_cast<std::size_t>(declaredBags), 0);
            haveHeader = true;
            continue;
        }
        if (!haveHeader) bad_line(lineno, "'" + t[0] + "' line before the s line");
        if (t[0] == "b") {
            if (t.size() < 2) bad_line(lineno, "b line needs a bag id");
            const int b = parse_int(t[1], lineno, "bag id") - 1;
            if (b < 0 || b >= declaredBags) bad_line(lineno, "bag id out of range");
            if (haveBag[static_cast<std::size_t>(b)]) bad_line(lineno, "duplicate bag " + std::to_string(b + 1));
            haveBag[static_cast<std::size_t>(b)] = 1;
            for (std::size_t i = 2; i < t.size(); ++i) {
                const int v = parse_int(t[i], lineno, "bag vertex") - 1;
                if (v < 0 || v >= pd.vertex_count) bad_line(lineno, "bag vertex out of range");
                pd.td.bags[static_cast<std::size_t>(b)].push_back(v);
            }
            if (static_cast<int>(pd.td.bags[static_cast<std::size_t>(b)].size()) > declaredMaxBag)
                bad_line(lineno, "bag exceeds declared max bag size");
            continue;
        }
        if (t.size() == 2) {
            const int a = parse_int(t[0], lineno, "tree edge endpoint") - 1;
            const int b = parse_int(t[1], lineno, "tree edge endpoint") - 1;
            if (a < 0 || a >= declaredBags || b < 0 || b >= declaredBags)
                bad_line(lineno, "tree edge endpoint out of range");
            pd.td.tree_edges.push_back({a, b});
            continue;
        }
        bad_line(lineno, "unrecognized line");
    }
    if (!haveHeader) throw ParseError("missing s line");
    for (int b = 0; b < declaredBags; ++b)
        if (!haveBag[static_cast<std::size_t>(b)])
            throw ParseError("no b line for bag " + std::to_string(b + 1));
    return pd;
}

ParsedDecomposition read_decomposition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_decomposition(in);
}

void write_decomposition(std::ostream& out, const TreeDecomposition& td, int vertex_count) {
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << vertex_count << '\n';
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out << "b " << b + 1;
        for (Vertex v : td.bags[b]) out << ' ' << v + 1;
        out << '\n';
    }
    for (const auto& [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

} // namespace netbound
