#include "netbound/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace netbound {

namespace {

constexpr int kAbsoluteMaskLimit = 20; // bitmask enumeration domain

void check_size(int n, int limit, const char* what) {
    if (n > limit || n > kAbsoluteMaskLimit)
        throw TooLarge(std::string(what) + ": " + std::to_string(n) + " vertices exceeds limit " +
                       std::to_string(std::min(limit, kAbsoluteMaskLimit)));
}

std::vector<std::uint32_t> adjacency_masks(const PlaneGraph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex u : g.rotation(v)) adj[static_cast<std::size_t>(v)] |= 1u << u;
    return adj;
}

bool mask_connected(std::uint32_t set, const std::vector<std::uint32_t>& adj) {
    if (!set) return false;
    std::uint32_t comp = set & (~set + 1); // lowest set bit
    for (;;) {
        std::uint32_t nb = comp;
        for (std::uint32_t m = comp; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            nb |= adj[static_cast<std::size_t>(v)];
        }
        nb &= set;
        if (nb == comp) return comp == set;
        comp = nb;
    }
}

std::array<std::uint32_t, 3> side_masks(const Frame3& f) {
    std::array<std::uint32_t, 3> s{0, 0, 0};
    for (int c = 0; c < 3; ++c)
        for (Vertex v : f.side_vertices(static_cast<SideColor>(c)))
            s[static_cast<std::size_t>(c)] |= 1u << v;
    return s;
}

/// All vine masks, then the inclusion-minimal ones (ascending popcount scan;
/// every vine contains a minimal vine found earlier, so one subset test
/// against the minimal list suffices).
std::vector<std::uint32_t> minimal_vine_masks(const PlaneGraph& g, const Frame3& f) {
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    const auto sides = side_masks(f);

    std::vector<std::uint32_t> vines;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t set = 1; set <= full; ++set) {
        if ((set & sides[0]) && (set & sides[1]) && (set & sides[2]) && mask_connected(set, adj))
            vines.push_back(set);
    }
    std::stable_sort(vines.begin(), vines.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t v : vines) {
        bool dominated = false;
        for (std::uint32_t m : minimal)
            if ((m & v) == m) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(v);
    }
    return minimal;
}

std::vector<Vertex> mask_to_vertices(std::uint32_t m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Visit k-subsets of {0..n-1} in lexicographic order of their sorted vertex
/// lists; stops early when the visitor returns true.
template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    if (k > n) return false;
    for (;;) {
        if (visit(c)) return true;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++c[static_cast<std::size_t>(i)];
        for (int jx = i + 1; jx < k; ++jx)
            c[static_cast<std::size_t>(jx)] = c[static_cast<std::size_t>(jx) - 1] + 1;
    }
}

} // namespace

std::vector<std::vector<Vertex>> minimal_vines(const PlaneGraph& g, const Frame3& f, int limit) {
    check_size(g.vertex_count(), limit, "minimal_vines");
    std::vector<std::vector<Vertex>> out;
    for (std::uint32_t m : minimal_vine_masks(g, f)) out.push_back(mask_to_vertices(m));
    std::sort(out.begin(), out.end());
    return out;
}

BruteNetOrder brute_net_order(const PlaneGraph& g, const Frame3& f, int limit) {
    const int n = g.vertex_count();
    check_size(n, limit, "brute_net_order");
    const auto minimal = minimal_vine_masks(g, f);

    BruteNetOrder res;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> found;
        const bool hit = for_each_combination(n, k, [&](const std::vector<int>& c) {
            std::uint32_t mask = 0;
            for (int v : c) mask |= 1u << v;
            for (std::uint32_t vm : minimal)
                if (!(vm & mask)) return false;
            found = c;
            return true;
        });
        if (hit) {
            res.order = k;
            res.cover.assign(found.begin(), found.end());
            return res;
        }
    }
    throw InternalError("brute_net_order: no cover found (V(G) always covers)");
}

BruteTreewidth brute_treewidth(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                               int limit) {
    const int n = vertex_count;
    if (n < 1) throw BadParameter("treewidth needs at least one vertex");
    check_size(n, limit, "brute_treewidth");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw BadParameter("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    }

    // f[S] = best width over orderings that eliminate S as a prefix, with v
    // as the last of S:  f[S] = min_v max(f[S\v], deg of v at its turn).
    // The degree of v after S\v is gone is |N(component of v in S)| outside S.
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    const auto elim_degree = [&](std::uint32_t prior, Vertex v) {
        const std::uint32_t inside = prior | (1u << v);
        std::uint32_t comp = 1u << v;
        std::uint32_t reach = 0;
        for (;;) {
            std::uint32_t nb = 0;
            for (std::uint32_t m = comp; m;) {
                const int x = std::countr_zero(m);
                m &= m - 1;
                nb |= adj[static_cast<std::size_t>(x)];
            }
            reach = nb;
            nb = (nb | comp) & inside;
            if (nb == comp) break;
            comp = nb;
        }
        return std::popcount(reach & ~inside);
    };

    std::vector<std::int8_t> f(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::int8_t> choice(static_cast<std::size_t>(full) + 1, -1);
    for (std::uint32_t S = 1; S <= full; ++S) {
        int best = n + 1;
        int bestv = -1;
        for (std::uint32_t m = S; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const std::uint32_t rest = S & ~(1u << v);
            const int cand = std::max<int>(f[rest], elim_degree(rest, v));
            if (cand < best) {
                best = cand;
                bestv = v;
            }
        }
        f[S] = static_cast<std::int8_t>(best);
        choice[S] = static_cast<std::int8_t>(bestv);
    }

    // Recover the elimination order (choice picks the last vertex of S).
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    {
        std::uint32_t S = full;
        for (int pos = n - 1; pos >= 0; --pos) {
            const Vertex v = choice[S];
            order[static_cast<std::size_t>(pos)] = v;
            S &= ~(1u << v);
        }
    }

    // Bags via fill-in simulation along the order; bag of v attaches to the
    // earliest-eliminated later neighbor.
    BruteTreewidth res;
    res.treewidth = f[full];
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint32_t> H = adj;
    std::uint32_t alive = full;
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[static_cast<std::size_t>(i)];
        const std::uint32_t nb = H[static_cast<std::size_t>(v)] & alive & ~(1u << v);
        std::vector<Vertex> bag = mask_to_vertices(nb | (1u << v));
        res.decomposition.bags.push_back(std::move(bag));
        if (nb) {
            int attach = -1;
            for (std::uint32_t m = nb; m;) {
                const int u = std::countr_zero(m);
                m &= m - 1;
                if (attach == -1 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(attach)])
                    attach = u;
            }
            res.decomposition.tree_edges.push_back({i, pos[static_cast<std::size_t>(attach)]});
            for (std::uint32_t m = nb; m;) {
                const int a = std::countr_zero(m);
                m &= m - 1;
                H[static_cast<std::size_t>(a)] |= nb & ~(1u << a);
            }
        } else {
            roots.push_back(i);
        }
        alive &= ~(1u << v);
    }
    for (std::size_t i = 1; i < roots.size(); ++i)
        res.decomposition.tree_edges.push_back({roots[0], roots[static_cast<std::size_t>(i)]});

    if (res.decomposition.width() != res.treewidth)
        throw InternalError("brute_treewidth: witness width " +
                            std::to_string(res.decomposition.width()) + " != optimum " +
                            std::to_string(res.treewidth));
    return res;
}

BruteTreewidth brute_treewidth(const PlaneGraph& g, int limit) {
    return brute_treewidth(g.vertex_count(), edge_list(g), limit);
}

bool check_min_cover_theorem(const PlaneGraph& g, const Frame3& f, int max_cover_size, int limit) {
    const int n = g.vertex_count();
    check_size(n, limit, "check_min_cover_theorem");

    // Left side: C covers the net iff no vine of g avoids C.
    const auto adj = adjacency_masks(g);
    const auto sides = side_masks(f);
    std::vector<std::uint32_t> vines;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t set = 1; set <= full; ++set)
        if ((set & sides[0]) && (set & sides[1]) && (set & sides[2]) && mask_connected(set, adj))
            vines.push_back(set);

    // Right side: some connected subgraph of the face graph, restricted to
    // C plus the face vertices, meets all three sides.
    const FaceGraph fg = build_face_graph(g);
    const int s = fg.graph.vertex_count();
    if (s > 31) throw TooLarge("check_min_cover_theorem: face graph too large for masks");
    std::vector<std::uint32_t> fadj(static_cast<std::size_t>(s), 0);
    for (Vertex v = 0; v < s; ++v)
        for (Vertex u : fg.graph.rotation(v)) fadj[static_cast<std::size_t>(v)] |= 1u << u;
    const std::uint32_t faceBits = ((s == 31) ? 0x7fffffffu : ((1u << s) - 1)) & ~full;

    const auto rhs = [&](std::uint32_t coverMask) {
        const std::uint32_t allowed = coverMask | faceBits;
        std::uint32_t left = allowed;
        while (left) {
            std::uint32_t comp = left & (~left + 1);
            for (;;) {
                std::uint32_t nb = comp;
                for (std::uint32_t m = comp; m;) {
                    const int v = std::countr_zero(m);
                    m &= m - 1;
                    nb |= fadj[static_cast<std::size_t>(v)];
                }
                nb &= allowed;
                if (nb == comp) break;
                comp = nb;
            }
            if ((comp & sides[0]) && (comp & sides[1]) && (comp & sides[2])) return true;
            left &= ~comp;
        }
        return false;
    };

    for (int k = 0; k <= std::min(max_cover_size, n); ++k) {
        bool mismatch = for_each_combination(n, k, [&](const std::vector<int>& c) {
            std::uint32_t mask = 0;
            for (int v : c) mask |= 1u << v;
            bool covered = true;
            for (std::uint32_t vm : vines)
                if (!(vm & mask)) {
                    covered = false;
                    break;
                }
            return covered != rhs(mask);
        });
        if (mismatch) return false;
    }
    return true;
}

} // namespace netbound
