#include "netbound/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace netbound {

namespace {

// Flattened directed-arc view of a rotation system. Arc ids are dense:
// arc (v, i) = off[v] + i points from v to rot[v][i].
struct ArcTable {
    std::vector<int> off;     // size n + 1
    std::vector<Vertex> tail; // per arc
    std::vector<Vertex> head; // per arc
    std::vector<int> twin;    // per arc: the reverse arc
    int arc_count = 0;

    int degree(Vertex v) const { return off[static_cast<std::size_t>(v) + 1] - off[v]; }

    /// Arc id of (u, v), or -1 if absent.
    int arc_id(const std::vector<std::vector<Vertex>>& rot, Vertex u, Vertex v) const {
        const auto& r = rot[static_cast<std::size_t>(u)];
        for (int i = 0; i < static_cast<int>(r.size()); ++i)
            if (r[static_cast<std::size_t>(i)] == v) return off[static_cast<std::size_t>(u)] + i;
        return -1;
    }
};

ArcTable build_arcs(const std::vector<std::vector<Vertex>>& rot) {
    const int n = static_cast<int>(rot.size());
    ArcTable t;
    t.off.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        t.off[static_cast<std::size_t>(v) + 1] =
            t.off[static_cast<std::size_t>(v)] + static_cast<int>(rot[static_cast<std::size_t>(v)].size());
    t.arc_count = t.off[static_cast<std::size_t>(n)];
    t.tail.resize(static_cast<std::size_t>(t.arc_count));
    t.head.resize(static_cast<std::size_t>(t.arc_count));
    for (int v = 0; v < n; ++v) {
        const auto& r = rot[static_cast<std::size_t>(v)];
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            const int a = t.off[static_cast<std::size_t>(v)] + i;
            t.tail[static_cast<std::size_t>(a)] = v;
            t.head[static_cast<std::size_t>(a)] = r[static_cast<std::size_t>(i)];
        }
    }

    // Pair every arc with its reverse. Each undirected edge must contribute
    // exactly two arcs, one per direction; anything else means the rotation
    // system is asymmetric or the graph has a parallel edge.
    std::vector<int> order(static_cast<std::size_t>(t.arc_count));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ka = std::minmax(t.tail[static_cast<std::size_t>(a)], t.head[static_cast<std::size_t>(a)]);
        auto kb = std::minmax(t.tail[static_cast<std::size_t>(b)], t.head[static_cast<std::size_t>(b)]);
        if (ka != kb) return ka < kb;
        return t.tail[static_cast<std::size_t>(a)] < t.tail[static_cast<std::size_t>(b)];
    });
    t.twin.assign(static_cast<std::size_t>(t.arc_count), -1);
    std::size_t i = 0;
    while (i < order.size()) {
        const int a = order[i];
        const auto key = std::minmax(t.tail[static_cast<std::size_t>(a)], t.head[static_cast<std::size_t>(a)]);
        std::size_t jx = i;
        while (jx < order.size() &&
               std::minmax(t.tail[static_cast<std::size_t>(order[jx])],
                           t.head[static_cast<std::size_t>(order[jx])]) == key)
            ++jx;
        const std::size_t run = jx - i;
        if (run != 2 || t.tail[static_cast<std::size_t>(order[i])] == t.tail[static_cast<std::size_t>(order[i + 1])])
            throw EmbeddingInvalid("edge {" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                   "} does not appear exactly once in each endpoint's rotation");
        t.twin[static_cast<std::size_t>(order[i])] = order[i + 1];
        t.twin[static_cast<std::size_t>(order[i + 1])] = order[i];
        i = jx;
    }
    return t;
}

/// Trace every face of the rotation system. Convention: the successor of the
/// arc (u, v) is (v, w) where w follows u counterclockwise in the rotation at
/// v. Every face is then traversed with its region to the right, and exactly
/// one traced walk goes counterclockwise around the whole graph — that one is
/// eligible as the unbounded face.
struct TracedFaces {
    std::vector<FaceWalk> walks;
    std::vector<int> face_of; // per arc id
};

TracedFaces trace_all(const ArcTable& t) {
    TracedFaces out;
    out.face_of.assign(static_cast<std::size_t>(t.arc_count), -1);
    for (int start = 0; start < t.arc_count; ++start) {
        if (out.face_of[static_cast<std::size_t>(start)] != -1) continue;
        const int f = static_cast<int>(out.walks.size());
        FaceWalk w;
        w.verts.push_back(t.tail[static_cast<std::size_t>(start)]);
        int a = start;
        do {
            out.face_of[static_cast<std::size_t>(a)] = f;
            w.verts.push_back(t.head[static_cast<std::size_t>(a)]);
            const int rev = t.twin[static_cast<std::size_t>(a)];
            const Vertex v = t.tail[static_cast<std::size_t>(rev)];
            const int idx = rev - t.off[static_cast<std::size_t>(v)];
            a = t.off[static_cast<std::size_t>(v)] + (idx + 1) % t.degree(v);
        } while (a != start);
        out.walks.push_back(std::move(w));
    }
    return out;
}

FaceWalk rotate_closed(const FaceWalk& w, int p) {
    const int len = w.length();
    FaceWalk r;
    r.verts.reserve(static_cast<std::size_t>(len) + 1);
    for (int i = 0; i <= len; ++i)
        r.verts.push_back(w.verts[static_cast<std::size_t>((p + i) % len)]);
    return r;
}

} // namespace

std::vector<Vertex> FaceWalk::distinct_vertices() const {
    std::vector<Vertex> d(verts.begin(), verts.end() - (length() >= 1 ? 1 : 0));
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation, Arc outer_anchor) {
    init(std::move(rotation), outer_anchor, nullptr);
}

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation) {
    init(std::move(rotation), std::nullopt, nullptr);
}

PlaneGraph PlaneGraph::with_outer_containing(std::vector<std::vector<Vertex>> rotation,
                                             const std::vector<Vertex>& required) {
    PlaneGraph g;
    g.init(std::move(rotation), std::nullopt, &required);
    return g;
}

void PlaneGraph::init(std::vector<std::vector<Vertex>> rotation,
                      std::optional<Arc> anchor,
                      const std::vector<Vertex>* required_outer) {
    const int n = static_cast<int>(rotation.size());
    if (n == 0) throw EmbeddingInvalid("a plane graph needs at least one vertex");
    for (int v = 0; v < n; ++v) {
        for (Vertex u : rotation[static_cast<std::size_t>(v)]) {
            if (u < 0 || u >= n)
                throw EmbeddingInvalid("rotation of vertex " + std::to_string(v) +
                                       " names out-of-range vertex " + std::to_string(u));
            if (u == v) throw EmbeddingInvalid("loop at vertex " + std::to_string(v));
        }
    }
    rot_ = std::move(rotation);

    const ArcTable arcs = build_arcs(rot_);
    edge_count_ = arcs.arc_count / 2;

    // Connectivity.
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<Vertex> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex u : rot_[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    q.push(u);
                }
        }
        if (reached != n) throw EmbeddingInvalid("graph is not connected");
    }

    if (n >= 3 && edge_count_ > 3 * n - 6)
        throw EmbeddingInvalid("too many edges for a simple planar graph");

    // Faces + Euler check. A rotation system of genus > 0 traces too few
    // faces, so this is the actual planarity test.
    TracedFaces traced;
    if (edge_count_ == 0) {
        traced.walks.push_back(FaceWalk{{0}});
    } else {
        traced = trace_all(arcs);
    }
    const int f = static_cast<int>(traced.walks.size());
    if (n - edge_count_ + f != 2)
        throw EmbeddingInvalid("rotation system is not a plane embedding (v - e + f = " +
                               std::to_string(n - edge_count_ + f) + ", expected 2)");

    // Designate the unbounded face.
    int outer = 0;
    if (anchor) {
        const auto [u, v] = *anchor;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw EmbeddingInvalid("anchor names an out-of-range vertex");
        const int a = arcs.arc_id(rot_, u, v);
        if (a < 0)
            throw EmbeddingInvalid("anchor arc (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") is not an edge");
        outer = traced.face_of[static_cast<std::size_t>(a)];
        // Start the outer walk at the anchor arc. Each arc is traversed by
        // exactly one face exactly once, so the position is unique.
        FaceWalk& w = traced.walks[static_cast<std::size_t>(outer)];
        for (int p = 0; p < w.length(); ++p) {
            if (w.verts[static_cast<std::size_t>(p)] == u && w.verts[static_cast<std::size_t>(p) + 1] == v) {
                w = rotate_closed(w, p);
                break;
            }
        }
        anchor_ = *anchor;
    } else {
        static const std::vector<Vertex> kNoRequirement;
        const std::vector<Vertex>& req = required_outer ? *required_outer : kNoRequirement;
        int best = -1;
        std::vector<Vertex> reqSorted(req);
        std::sort(reqSorted.begin(), reqSorted.end());
        reqSorted.erase(std::unique(reqSorted.begin(), reqSorted.end()), reqSorted.end());
        for (int i = 0; i < f; ++i) {
            const auto dv = traced.walks[static_cast<std::size_t>(i)].distinct_vertices();
            if (!std::includes(dv.begin(), dv.end(), reqSorted.begin(), reqSorted.end())) continue;
            if (best == -1) {
                best = i;
                continue;
            }
            const FaceWalk& cand = traced.walks[static_cast<std::size_t>(i)];
            const FaceWalk& cur = traced.walks[static_cast<std::size_t>(best)];
            if (cand.length() != cur.length()) {
                if (cand.length() > cur.length()) best = i;
            } else if (std::lexicographical_compare(cand.verts.begin(), cand.verts.end(),
                                                    cur.verts.begin(), cur.verts.end())) {
                best = i;
            }
        }
        if (best == -1)
            throw EmbeddingInvalid("no face walk visits all required outer vertices");
        outer = best;
        if (edge_count_ > 0) {
            const FaceWalk& w = traced.walks[static_cast<std::size_t>(outer)];
            anchor_ = Arc{w.verts[0], w.verts[1]};
        }
    }

    faces_.clear();
    faces_.reserve(static_cast<std::size_t>(f));
    faces_.push_back(std::move(traced.walks[static_cast<std::size_t>(outer)]));
    for (int i = 0; i < f; ++i)
        if (i != outer) faces_.push_back(std::move(traced.walks[static_cast<std::size_t>(i)]));

    sorted_adj_ = rot_;
    for (auto& a : sorted_adj_) std::sort(a.begin(), a.end());
}

bool PlaneGraph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = sorted_adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

Arc PlaneGraph::anchor() const {
    if (!anchor_) throw BadParameter("an edgeless graph has no anchor arc");
    return *anchor_;
}

// ═══════════════════════════════════════════════════════════════════════════
// Face graph
// ═══════════════════════════════════════════════════════════════════════════

FaceGraph build_face_graph(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> sourceFace;

    // For every bounded face f create a vertex v_f. Joining v_f to each
    // distinct walk vertex keeps the embedding planar when
    //   - the rotation at v_f is the reverse of the walk's first-occurrence
    //     order (the walk circles its region clockwise when seen from inside,
    //     so the new spokes leave v_f counterclockwise in reverse order), and
    //   - at a walk vertex x reached by the transition (prev -> x -> next),
    //     v_f slots into x's rotation directly after prev.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> wedge(static_cast<std::size_t>(n));
    std::vector<std::vector<Vertex>> spokeRot;
    std::vector<int> lastSeen(static_cast<std::size_t>(n), -1);
    for (int f = 1; f < g.face_count(); ++f) {
        const FaceWalk& w = g.faces()[static_cast<std::size_t>(f)];
        const int len = w.length();
        const Vertex fv = n + static_cast<int>(spokeRot.size());
        sourceFace.push_back(f);
        std::vector<Vertex> firstOrder;
        for (int i = 0; i < len; ++i) {
            const Vertex x = w.verts[static_cast<std::size_t>(i)];
            if (lastSeen[static_cast<std::size_t>(x)] == f) continue;
            lastSeen[static_cast<std::size_t>(x)] = f;
            firstOrder.push_back(x);
            const Vertex prev = w.verts[static_cast<std::size_t>((i - 1 + len) % len)];
            wedge[static_cast<std::size_t>(x)].push_back({prev, fv});
        }
        std::reverse(firstOrder.begin(), firstOrder.end());
        spokeRot.push_back(std::move(firstOrder));
    }

    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n) + spokeRot.size());
    for (int v = 0; v < n; ++v) {
        auto& r = rot[static_cast<std::size_t>(v)];
        r.reserve(g.rotation(v).size() + wedge[static_cast<std::size_t>(v)].size());
        for (Vertex u : g.rotation(v)) {
            r.push_back(u);
            for (const auto& [after, fv] : wedge[static_cast<std::size_t>(v)])
                if (after == u) r.push_back(fv);
        }
    }
    for (std::size_t i = 0; i < spokeRot.size(); ++i)
        rot[static_cast<std::size_t>(n) + i] = std::move(spokeRot[i]);

    PlaneGraph graph = g.edge_count() > 0 ? PlaneGraph(std::move(rot), g.anchor())
                                          : PlaneGraph(std::move(rot));
    return FaceGraph{std::move(graph), n, std::move(sourceFace)};
}

// ═══════════════════════════════════════════════════════════════════════════
// Induced subgraphs
// ═══════════════════════════════════════════════════════════════════════════

std::vector<SubgraphComponent> induced_subgraph(const PlaneGraph& g,
                                                const std::vector<Vertex>& vertices) {
    const int n = g.vertex_count();
    if (vertices.empty()) throw EmptySubgraph("induced subgraph on an empty vertex set");
    std::vector<char> keep(static_cast<std::size_t>(n), 0);
    for (Vertex v : vertices) {
        if (v < 0 || v >= n)
            throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
        if (keep[static_cast<std::size_t>(v)])
            throw BadParameter("duplicate vertex " + std::to_string(v) + " in subgraph request");
        keep[static_cast<std::size_t>(v)] = 1;
    }

    std::vector<char> onPeriph(static_cast<std::size_t>(n), 0);
    for (Vertex v : g.peripheral_walk().verts) onPeriph[static_cast<std::size_t>(v)] = 1;

    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int compCount = 0;
    for (int s = 0; s < n; ++s) {
        if (!keep[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] != -1) continue;
        std::queue<Vertex> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = compCount;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex u : g.rotation(v))
                if (keep[static_cast<std::size_t>(u)] && comp[static_cast<std::size_t>(u)] == -1) {
                    comp[static_cast<std::size_t>(u)] = compCount;
                    q.push(u);
                }
        }
        ++compCount;
    }

    std::vector<SubgraphComponent> out;
    out.reserve(static_cast<std::size_t>(compCount));
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < compCount; ++c) {
        std::vector<Vertex> members;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            local[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;

        std::vector<std::vector<Vertex>> rot(members.size());
        std::vector<Vertex> required;
        for (int i = 0; i < static_cast<int>(members.size()); ++i) {
            const Vertex p = members[static_cast<std::size_t>(i)];
            bool lostNeighbor = false;
            for (Vertex u : g.rotation(p)) {
                if (keep[static_cast<std::size_t>(u)])
                    rot[static_cast<std::size_t>(i)].push_back(local[static_cast<std::size_t>(u)]);
                else
                    lostNeighbor = true;
            }
            // Vertices that were on the old boundary or lost a neighbor sit
            // on the boundary of the cut-open region, so the new outer face
            // must reach all of them.
            if (lostNeighbor || onPeriph[static_cast<std::size_t>(p)]) required.push_back(i);
        }
        out.push_back(SubgraphComponent{PlaneGraph::with_outer_containing(std::move(rot), required),
                                        std::move(members)});
    }
    return out;
}

} // namespace netbound
