#include "netbound/tree_decomposition.hpp"

#include <algorithm>
#include <queue>

namespace netbound {

int TreeDecomposition::width() const {
    std::size_t big = 0;
    for (const auto& b : bags) big = std::max(big, b.size());
    return static_cast<int>(big) - 1;
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const PlaneGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex u : g.rotation(v))
            if (v < u) edges.push_back({v, u});
    std::sort(edges.begin(), edges.end());
    return edges;
}

ValidationReport validate_tree_decomposition(int vertex_count,
                                             const std::vector<std::pair<Vertex, Vertex>>& edges,
                                             const TreeDecomposition& td) {
    const auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return fail("decomposition has no bags");

    // Tree shape.
    if (static_cast<int>(td.tree_edges.size()) != nb - 1)
        return fail("tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                    std::to_string(nb) + " bags (need bags - 1)");
    std::vector<std::vector<int>> tadj(static_cast<std::size_t>(nb));
    for (const auto& [a, b] : td.tree_edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb || a == b)
            return fail("tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") is invalid");
        tadj[static_cast<std::size_t>(a)].push_back(b);
        tadj[static_cast<std::size_t>(b)].push_back(a);
    }
    {
        std::vector<char> seen(static_cast<std::size_t>(nb), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            const int b = q.front();
            q.pop();
            for (int c : tadj[static_cast<std::size_t>(b)])
                if (!seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = 1;
                    ++reached;
                    q.push(c);
                }
        }
        if (reached != nb) return fail("tree edges do not connect all bags");
    }

    // Bag contents; per-vertex bag counts.
    std::vector<std::vector<Vertex>> sorted(td.bags.size());
    std::vector<int> bagCount(static_cast<std::size_t>(vertex_count), 0);
    for (int b = 0; b < nb; ++b) {
        sorted[static_cast<std::size_t>(b)] = td.bags[static_cast<std::size_t>(b)];
        auto& s = sorted[static_cast<std::size_t>(b)];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            return fail("bag " + std::to_string(b) + " lists a vertex twice");
        for (Vertex v : s) {
            if (v < 0 || v >= vertex_count)
                return fail("bag " + std::to_string(b) + " contains out-of-range vertex " + std::to_string(v));
            ++bagCount[static_cast<std::size_t>(v)];
        }
    }
    for (Vertex v = 0; v < vertex_count; ++v)
        if (bagCount[static_cast<std::size_t>(v)] == 0)
            return fail("vertex " + std::to_string(v) + " appears in no bag");

    // Connectivity of each vertex's bags: in a tree, a vertex occupying c
    // bags induces a connected subtree iff exactly c - 1 tree edges join two
    // bags that both contain it.
    std::vector<int> linkCount(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [a, b] : td.tree_edges) {
        const auto& sa = sorted[static_cast<std::size_t>(a)];
        const auto& sb = sorted[static_cast<std::size_t>(b)];
        std::size_t i = 0, jx = 0;
        while (i < sa.size() && jx < sb.size()) {
            if (sa[i] < sb[jx]) ++i;
            else if (sb[jx] < sa[i]) ++jx;
            else {
                ++linkCount[static_cast<std::size_t>(sa[i])];
                ++i;
                ++jx;
            }
        }
    }
    for (Vertex v = 0; v < vertex_count; ++v)
        if (linkCount[static_cast<std::size_t>(v)] != bagCount[static_cast<std::size_t>(v)] - 1)
            return fail("bags containing vertex " + std::to_string(v) + " are not connected in the tree");

    // Edge coverage.
    std::vector<std::vector<int>> bagsOf(static_cast<std::size_t>(vertex_count));
    for (int b = 0; b < nb; ++b)
        for (Vertex v : sorted[static_cast<std::size_t>(b)]) bagsOf[static_cast<std::size_t>(v)].push_back(b);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            return fail("graph edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        bool covered = false;
        for (int b : bagsOf[static_cast<std::size_t>(u)]) {
            const auto& s = sorted[static_cast<std::size_t>(b)];
            if (std::binary_search(s.begin(), s.end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") shares no bag");
    }
    return {};
}

ValidationReport validate_tree_decomposition(const PlaneGraph& g, const TreeDecomposition& td) {
    return validate_tree_decomposition(g.vertex_count(), edge_list(g), td);
}

} // namespace netbound
