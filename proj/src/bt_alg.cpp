#include "netbound/bt_alg.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

namespace netbound {

// ═══════════════════════════════════════════════════════════════════════════
// Recoloring
// ═══════════════════════════════════════════════════════════════════════════

namespace {

FaceWalk rotate_closed(const FaceWalk& w, int p) {
    const int len = w.length();
    FaceWalk r;
    r.verts.reserve(static_cast<std::size_t>(len) + 1);
    for (int i = 0; i <= len; ++i)
        r.verts.push_back(w.verts[static_cast<std::size_t>((p + i) % len)]);
    return r;
}

FaceWalk reverse_closed(const FaceWalk& w) {
    FaceWalk r = w;
    std::reverse(r.verts.begin(), r.verts.end());
    return r;
}

/// Colors a frame puts on cyclic walk position t; position 0 also carries the
/// colors of the closing position, which names the same vertex occurrence.
ColorMask cyclic_colors_at(const Frame3& f, int t) {
    ColorMask m = f.colors_at(t);
    if (t == 0) m |= f.colors_at(f.n());
    return m;
}

/// Search split indices realizing a wanted coloring on one traversal
/// direction of a closed walk. Every vertex must end up with at least its
/// wanted colors; extra colors are harmless, so each want only bounds the
/// splits from one side. Blue wants push the blue/red split j up, yellow
/// wants push the red/yellow split k down, and each red want needs some
/// occurrence inside [j..k]. The smallest k that works only grows with j,
/// so j at its lower bound is the one candidate per rotation. Rotations are
/// scanned in ascending order, so the result is deterministic.
std::optional<Frame3> solve_frame(const FaceWalk& w, const std::vector<ColorMask>& want,
                                  int vertex_count) {
    const int len = w.length();
    const ColorMask B = color_bit(SideColor::Blue);
    const ColorMask R = color_bit(SideColor::Red);
    const ColorMask Y = color_bit(SideColor::Yellow);

    std::vector<std::vector<int>> coords(static_cast<std::size_t>(vertex_count));
    std::vector<Vertex> touched;
    for (int rho = 0; rho < len; ++rho) {
        for (Vertex v : touched) coords[static_cast<std::size_t>(v)].clear();
        touched.clear();
        // Positions of each vertex after rotating the walk start to rho; the
        // closing position len duplicates position 0's vertex and matters
        // because it is always yellow while position 0 is always blue.
        for (int i = 0; i <= len; ++i) {
            const Vertex v = w.verts[static_cast<std::size_t>((rho + i) % len)];
            auto& cs = coords[static_cast<std::size_t>(v)];
            if (cs.empty()) touched.push_back(v);
            cs.push_back(i);
        }

        int jmin = 0, kmax = len;
        std::vector<const std::vector<int>*> needR; // position lists of red-wanting vertices
        for (Vertex v : touched) {
            const auto& cs = coords[static_cast<std::size_t>(v)];
            const ColorMask wv = want[static_cast<std::size_t>(v)];
            if (wv & B) jmin = std::max(jmin, cs.front());
            if (wv & Y) kmax = std::min(kmax, cs.back());
            if (wv & R) needR.push_back(&cs);
        }

        int klo = jmin;
        bool starved = false;
        for (const auto* cs : needR) {
            const auto c = std::lower_bound(cs->begin(), cs->end(), jmin);
            if (c == cs->end()) { starved = true; break; }
            klo = std::max(klo, *c);
        }
        if (!starved && klo <= kmax) return Frame3(rotate_closed(w, rho), jmin, klo, vertex_count);
    }
    return std::nullopt;
}

} // namespace

Frame3 recolor_child(const Frame3& parent_frame, const SubgraphComponent& child,
                     const std::vector<Vertex>& must_color) {
    const PlaneGraph& cg = child.graph;
    const int n = cg.vertex_count();
    const FaceWalk& walk = cg.peripheral_walk();
    const int len = walk.length();
    if (len == 0) return Frame3(walk, 0, 0, n); // lone vertex: all three colors

    // Inherited colors come per walk position: each vertex collects the colors
    // of the parent-walk positions it occupies, and those positions must form
    // one contiguous arc of the parent walk (they always do when the removed
    // cover came from a net, because the component hangs off a single arc).
    const FaceWalk& pw = parent_frame.walk();
    const int ppos = std::max(parent_frame.n(), 1); // cyclic positions; a lone vertex has one
    std::unordered_map<Vertex, std::vector<int>> parentPositions;
    for (int t = 0; t < ppos && t < static_cast<int>(pw.verts.size()); ++t)
        parentPositions[pw.verts[static_cast<std::size_t>(t)]].push_back(t);

    std::vector<ColorMask> inherited(static_cast<std::size_t>(n), 0);
    std::vector<char> inherits(static_cast<std::size_t>(n), 0);
    std::vector<char> onArc(static_cast<std::size_t>(ppos), 0);
    std::unordered_map<Vertex, Vertex> childOf; // parent id -> child id, colored only
    int arcSize = 0;
    for (Vertex v = 0; v < n; ++v) {
        const auto it = parentPositions.find(child.to_parent[static_cast<std::size_t>(v)]);
        if (it == parentPositions.end()) continue;
        inherits[static_cast<std::size_t>(v)] = 1;
        childOf[it->first] = v;
        for (int t : it->second) {
            inherited[static_cast<std::size_t>(v)] |= cyclic_colors_at(parent_frame, t);
            if (!onArc[static_cast<std::size_t>(t)]) {
                onArc[static_cast<std::size_t>(t)] = 1;
                ++arcSize;
            }
        }
    }

    {
        std::vector<char> onWalk(static_cast<std::size_t>(n), 0);
        for (Vertex v : walk.verts) onWalk[static_cast<std::size_t>(v)] = 1;
        for (Vertex v = 0; v < n; ++v)
            if (inherits[static_cast<std::size_t>(v)] && !onWalk[static_cast<std::size_t>(v)])
                throw RecolorContradiction("inherited color on vertex " + std::to_string(v) +
                                           " which is not on the component's peripheral walk");
        for (Vertex v : must_color)
            if (v < 0 || v >= n || !onWalk[static_cast<std::size_t>(v)])
                throw RecolorContradiction("vertex " + std::to_string(v) +
                                           " must take a missing color but is not on the peripheral walk");
    }

    if (arcSize == 0) {
        // Nothing inherited: all blue, smallest vertex doubles as red+yellow.
        const Vertex vmin = *std::min_element(walk.verts.begin(), walk.verts.end());
        int p0 = 0;
        while (walk.verts[static_cast<std::size_t>(p0)] != vmin) ++p0;
        return Frame3(rotate_closed(walk, p0), len, len, n);
    }

    // Endpoints of the inherited arc, in child ids. When the arc is the whole
    // parent walk there are no endpoints, but then no color is missing either.
    Vertex e1 = -1, e2 = -1;
    if (arcSize < ppos) {
        int starts = 0, qa = -1;
        for (int t = 0; t < ppos; ++t)
            if (onArc[static_cast<std::size_t>(t)] && !onArc[static_cast<std::size_t>((t + ppos - 1) % ppos)]) {
                ++starts;
                qa = t;
            }
        if (starts != 1)
            throw RecolorContradiction("inherited colors do not occupy one contiguous arc of the parent walk");
        const int qb = (qa + arcSize - 1) % ppos;
        e1 = childOf.at(pw.verts[static_cast<std::size_t>(qa)]);
        e2 = childOf.at(pw.verts[static_cast<std::size_t>(qb)]);
    }

    ColorMask pool = 0;
    for (Vertex v = 0; v < n; ++v) pool |= inherited[static_cast<std::size_t>(v)];
    const ColorMask missing = kAllColors & ~pool;

    // Walk vertices with nothing inherited form the newly exposed boundary.
    std::vector<Vertex> fresh;
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (Vertex v : walk.verts)
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                if (!inherits[static_cast<std::size_t>(v)]) fresh.push_back(v);
            }
    }

    // Where a colored stretch of the child walk meets the fresh part, the
    // meeting vertex faces the removed cover as well; when the walk doubles
    // back through cut vertices these can differ from the arc endpoints.
    std::vector<Vertex> runBoundary;
    if (!fresh.empty()) {
        const auto colored_at = [&](int p) {
            return inherits[static_cast<std::size_t>(walk.verts[static_cast<std::size_t>(p)])] != 0;
        };
        const auto note = [&](Vertex v) {
            if (std::find(runBoundary.begin(), runBoundary.end(), v) == runBoundary.end())
                runBoundary.push_back(v);
        };
        for (int p = 0; p < len; ++p) {
            if (!colored_at(p) || colored_at((p + len - 1) % len)) continue; // not a stretch start
            int q = p;
            while (colored_at((q + 1) % len)) ++q;
            note(walk.verts[static_cast<std::size_t>(p)]);
            note(walk.verts[static_cast<std::size_t>(q % len)]);
        }
    }

    // Missing colors are painted onto the new boundary: the fresh vertices
    // plus colored vertices that face the removed cover. Every candidate set
    // includes the vertices the caller marked as adjacent to the removed
    // cover — each of those must carry a missing color or a later component
    // could touch the same cover without inheriting a color that charges it.
    // Sets are tried from the canonical one (fresh plus arc endpoints)
    // through run-boundary alternatives down to endpoint-dropping fallbacks
    // for degenerate walks. With two colors missing, one covers the set and
    // the other additionally lands on one boundary vertex.
    std::vector<std::vector<Vertex>> paintSets;
    const auto add_set = [&](std::vector<Vertex> s) {
        s.insert(s.end(), must_color.begin(), must_color.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) return;
        if (std::find(paintSets.begin(), paintSets.end(), s) == paintSets.end())
            paintSets.push_back(std::move(s));
    };
    const auto minus = [](std::vector<Vertex> s, std::initializer_list<Vertex> drop) {
        for (Vertex d : drop) s.erase(std::remove(s.begin(), s.end(), d), s.end());
        return s;
    };
    std::array<ColorMask, 2> mbits{};
    int mcount = 0;
    for (int c = 0; c < 3 && mcount < 2; ++c)
        if (missing & color_bit(static_cast<SideColor>(c))) mbits[static_cast<std::size_t>(mcount++)] = color_bit(static_cast<SideColor>(c));

    std::vector<std::vector<ColorMask>> paints;
    if (mcount == 0) {
        paints.emplace_back(static_cast<std::size_t>(n), 0);
    } else {
        std::vector<Vertex> canonical = fresh;
        if (e1 >= 0) canonical.push_back(e1);
        if (e2 >= 0) canonical.push_back(e2);
        std::sort(canonical.begin(), canonical.end());
        canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
        std::vector<Vertex> viaRuns = fresh;
        viaRuns.insert(viaRuns.end(), runBoundary.begin(), runBoundary.end());
        std::vector<Vertex> everything = canonical;
        everything.insert(everything.end(), runBoundary.begin(), runBoundary.end());
        add_set(canonical);
        add_set(viaRuns);
        add_set(everything);
        add_set(minus(canonical, {e1}));
        add_set(minus(canonical, {e2}));
        if (runBoundary.size() >= 1) add_set(minus(viaRuns, {runBoundary.front()}));
        if (runBoundary.size() >= 2) add_set(minus(viaRuns, {runBoundary.back()}));
        add_set(minus(canonical, {e1, e2}));
        if (runBoundary.size() >= 2)
            add_set(minus(viaRuns, {runBoundary.front(), runBoundary.back()}));
        // Fresh vertices that do not touch the removed cover need no paint,
        // so fresh-free sets close out the ladder for walks where coloring
        // the whole exposed stretch is unsatisfiable.
        {
            std::vector<Vertex> ends;
            if (e1 >= 0) ends.push_back(e1);
            if (e2 >= 0) ends.push_back(e2);
            add_set(ends);
        }
        add_set(runBoundary);
        add_set({});

        std::vector<Vertex> receivers;
        if (e2 >= 0) receivers.push_back(e2);
        if (e1 >= 0 && e1 != e2) receivers.push_back(e1);
        for (auto it = runBoundary.rbegin(); it != runBoundary.rend(); ++it)
            if (std::find(receivers.begin(), receivers.end(), *it) == receivers.end())
                receivers.push_back(*it);

        const auto add_variant = [&](const std::vector<Vertex>& s, ColorMask mA, Vertex recv, ColorMask mB) {
            std::vector<ColorMask> p(static_cast<std::size_t>(n), 0);
            for (Vertex v : s) p[static_cast<std::size_t>(v)] |= mA;
            if (recv >= 0) p[static_cast<std::size_t>(recv)] |= mB;
            if (std::find(paints.begin(), paints.end(), p) == paints.end()) paints.push_back(std::move(p));
        };
        for (const auto& s : paintSets) {
            if (mcount == 1) {
                add_variant(s, mbits[0], -1, 0);
                continue;
            }
            for (int first : {0, 1}) {
                const ColorMask mA = mbits[static_cast<std::size_t>(first)];
                const ColorMask mB = mbits[static_cast<std::size_t>(1 - first)];
                for (Vertex recv : receivers)
                    if (std::binary_search(s.begin(), s.end(), recv)) add_variant(s, mA, recv, mB);
                for (auto it = s.rbegin(); it != s.rend(); ++it) add_variant(s, mA, *it, mB);
            }
        }
    }

    // The traversal direction of the new outer walk is not canonical; the
    // inherited arc may read in the opposite cyclic order.
    std::vector<ColorMask> want(static_cast<std::size_t>(n), 0);
    for (int dir = 0; dir < 2; ++dir) {
        const FaceWalk w = dir == 0 ? walk : reverse_closed(walk);
        for (const auto& p : paints) {
            for (Vertex v = 0; v < n; ++v)
                want[static_cast<std::size_t>(v)] =
                    inherited[static_cast<std::size_t>(v)] | p[static_cast<std::size_t>(v)];
            if (auto f = solve_frame(w, want, n)) return *f;
        }
    }

    std::string detail = "walk";
    for (Vertex v : walk.verts) {
        detail += ' ';
        detail += std::to_string(v);
        detail += '[';
        const ColorMask m = inherited[static_cast<std::size_t>(v)];
        for (int c = 0; c < 3; ++c)
            if (m & color_bit(static_cast<SideColor>(c))) detail += color_name(static_cast<SideColor>(c))[0];
        detail += ']';
        if (std::find(must_color.begin(), must_color.end(), v) != must_color.end()) detail += '*';
    }
    throw RecolorContradiction("no frame realizes the inherited coloring on the peripheral walk (" +
                               detail + ")");
}

Frame3 recolor_child(const Frame3& parent_frame, const SubgraphComponent& child) {
    return recolor_child(parent_frame, child, {});
}

// ═══════════════════════════════════════════════════════════════════════════
// Search
// ═══════════════════════════════════════════════════════════════════════════

namespace {

struct PendingNode {
    PlaneGraph graph;
    std::vector<Vertex> to_root;
    Frame3 frame;
};

} // namespace

BtResult bt_alg(const PlaneGraph& g, const Frame3& root_frame) {
    const int n = g.vertex_count();
    BtResult res;
    std::vector<std::optional<PendingNode>> pending;
    std::queue<int> todo;

    {
        SearchNode root;
        root.id = {0};
        root.vertices.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) root.vertices[static_cast<std::size_t>(v)] = v;
        res.nodes.push_back(std::move(root));
        std::vector<Vertex> ident = res.nodes[0].vertices;
        pending.push_back(PendingNode{g, std::move(ident), root_frame});
        todo.push(0);
    }

    int bestlow = -1;
    std::vector<int> coveredBy(static_cast<std::size_t>(n), -1);

    while (!todo.empty()) {
        const int idx = todo.front();
        todo.pop();
        PendingNode work = std::move(*pending[static_cast<std::size_t>(idx)]);
        pending[static_cast<std::size_t>(idx)].reset();

        // Sanity: the outside neighborhood of V(G_i) must already be covered,
        // by at most three distinct earlier covers (one per frame side).
        {
            std::vector<char> inside(static_cast<std::size_t>(n), 0);
            for (Vertex v : res.nodes[static_cast<std::size_t>(idx)].vertices)
                inside[static_cast<std::size_t>(v)] = 1;
            std::set<int> owners;
            for (Vertex v : res.nodes[static_cast<std::size_t>(idx)].vertices)
                for (Vertex u : g.rotation(v)) {
                    if (inside[static_cast<std::size_t>(u)]) continue;
                    const int owner = coveredBy[static_cast<std::size_t>(u)];
                    if (owner < 0)
                        throw InternalError("subgraph neighbor " + std::to_string(u) +
                                            " not covered by any earlier node");
                    owners.insert(owner);
                }
            if (owners.size() > 3)
                throw InternalError("subgraph touches " + std::to_string(owners.size()) +
                                    " earlier covers (expected at most 3)");
        }

        if (static_cast<int>(res.nodes[static_cast<std::size_t>(idx)].vertices.size()) < bestlow) {
            SearchNode& node = res.nodes[static_cast<std::size_t>(idx)];
            node.pruned = true;
            node.cover = node.vertices;
            for (Vertex v : node.cover) coveredBy[static_cast<std::size_t>(v)] = idx;
            continue;
        }

        const NetCoverResult nc = net_alg(work.graph, work.frame);
        {
            SearchNode& node = res.nodes[static_cast<std::size_t>(idx)];
            node.cover.reserve(nc.cover.size());
            for (Vertex v : nc.cover)
                node.cover.push_back(work.to_root[static_cast<std::size_t>(v)]);
            for (Vertex v : node.cover) coveredBy[static_cast<std::size_t>(v)] = idx;
        }
        bestlow = std::max(bestlow, nc.order);

        std::vector<Vertex> rest;
        rest.reserve(static_cast<std::size_t>(work.graph.vertex_count()) - nc.cover.size());
        std::size_t ci = 0;
        for (Vertex v = 0; v < work.graph.vertex_count(); ++v) {
            if (ci < nc.cover.size() && nc.cover[ci] == v) {
                ++ci;
                continue;
            }
            rest.push_back(v);
        }
        if (rest.empty()) continue;

        // Vertices next to the removed cover must pick up a color the cover
        // cut their component off from. Later nodes charge each incident
        // earlier cover to such a color, which is what keeps every subgraph
        // touching at most three earlier covers and every bag small.
        std::vector<char> nearCover(static_cast<std::size_t>(work.graph.vertex_count()), 0);
        for (Vertex c : nc.cover)
            for (Vertex u : work.graph.rotation(c)) nearCover[static_cast<std::size_t>(u)] = 1;

        // res.nodes may reallocate while children are appended; no reference
        // into it survives a push_back.
        const std::vector<int> parentId = res.nodes[static_cast<std::size_t>(idx)].id;
        int childPos = 0;
        for (auto& comp : induced_subgraph(work.graph, rest)) {
            std::vector<Vertex> must;
            for (Vertex v = 0; v < comp.graph.vertex_count(); ++v)
                if (nearCover[static_cast<std::size_t>(comp.to_parent[static_cast<std::size_t>(v)])])
                    must.push_back(v);
            Frame3 childFrame = recolor_child(work.frame, comp, must);
            const int childIdx = static_cast<int>(res.nodes.size());
            SearchNode child;
            child.id = parentId;
            child.id.push_back(++childPos);
            child.parent = idx;
            child.vertices.reserve(comp.to_parent.size());
            for (Vertex v : comp.to_parent)
                child.vertices.push_back(work.to_root[static_cast<std::size_t>(v)]);
            std::vector<Vertex> childToRoot = child.vertices;
            res.nodes.push_back(std::move(child));
            res.nodes[static_cast<std::size_t>(idx)].children.push_back(childIdx);
            pending.push_back(PendingNode{std::move(comp.graph), std::move(childToRoot), std::move(childFrame)});
            todo.push(childIdx);
        }
    }

    // The covers must partition the vertex set.
    std::size_t total = 0;
    for (const auto& nd : res.nodes) total += nd.cover.size();
    if (total != static_cast<std::size_t>(n))
        throw InternalError("node covers do not partition the vertex set");
    for (int v = 0; v < n; ++v)
        if (coveredBy[static_cast<std::size_t>(v)] < 0)
            throw InternalError("vertex " + std::to_string(v) + " never covered");

    res.kb = bestlow;
    return res;
}

BtResult bt_alg(const PlaneGraph& g) { return bt_alg(g, default_frame(g)); }

// ═══════════════════════════════════════════════════════════════════════════
// Decomposition extraction
// ═══════════════════════════════════════════════════════════════════════════

DecompositionResult build_decomposition(const PlaneGraph& g, const BtResult& bt) {
    const int n = g.vertex_count();
    DecompositionResult out;
    out.kb = bt.kb;
    out.decomposition.bags.reserve(bt.nodes.size());
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < static_cast<int>(bt.nodes.size()); ++i) {
        const SearchNode& nd = bt.nodes[static_cast<std::size_t>(i)];
        for (Vertex v : nd.vertices) stamp[static_cast<std::size_t>(v)] = i;
        std::vector<Vertex> bag = nd.cover;
        for (Vertex v : nd.vertices)
            for (Vertex u : g.rotation(v))
                if (stamp[static_cast<std::size_t>(u)] != i) {
                    bag.push_back(u); // u is outside V(G_i) and not yet collected
                    stamp[static_cast<std::size_t>(u)] = i;
                }
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        out.decomposition.bags.push_back(std::move(bag));
        if (nd.parent >= 0) out.decomposition.tree_edges.push_back({nd.parent, i});
    }

    const ValidationReport rep = validate_tree_decomposition(g, out.decomposition);
    if (!rep.ok) throw ValidationFailure("constructed decomposition invalid: " + rep.message);
    if (out.decomposition.width() > 4 * out.kb - 1)
        throw InternalError("decomposition width " + std::to_string(out.decomposition.width()) +
                            " exceeds 4*KB - 1 = " + std::to_string(4 * out.kb - 1));
    return out;
}

} // namespace netbound
