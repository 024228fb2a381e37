#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "netbound/frame.hpp"
#include "netbound/generators.hpp"
#include "netbound/plane_graph.hpp"

namespace netbound::testing {

/// Random connected plane graph: a stacked triangulation thinned by random
/// edge deletions that keep it connected (the anchor edge 0-1 is never
/// touched, so the outer face keeps its designation as faces merge).
inline PlaneGraph random_plane_graph(int n, std::mt19937_64& rng) {
    if (n <= 1) return PlaneGraph(std::vector<std::vector<Vertex>>{{}});
    if (n == 2) return PlaneGraph({{1}, {0}}, Arc{0, 1});
    std::uint64_t seed = rng();
    PlaneGraph t = make_random_triangulation(n, seed);

    std::vector<std::vector<Vertex>> rot;
    rot.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) rot.push_back(t.rotation(v));

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : rot[static_cast<std::size_t>(v)])
            if (v < u && !(v == 0 && u == 1)) edges.push_back({v, u});
    std::shuffle(edges.begin(), edges.end(), rng);

    const auto connected_without = [&rot, n](Vertex a, Vertex b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : rot[static_cast<std::size_t>(v)]) {
                if ((v == a && u == b) || (v == b && u == a)) continue;
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        return reached == n;
    };
    const auto erase_from = [&rot](Vertex v, Vertex u) {
        auto& l = rot[static_cast<std::size_t>(v)];
        l.erase(std::find(l.begin(), l.end(), u));
    };

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (const auto& [a, b] : edges) {
        if (coin(rng) < 0.45 && connected_without(a, b)) {
            erase_from(a, b);
            erase_from(b, a);
        }
    }
    return PlaneGraph(std::move(rot), Arc{0, 1});
}

/// Uniformly random frame on g's peripheral walk.
inline Frame3 random_frame(const PlaneGraph& g, std::mt19937_64& rng) {
    const int n = g.peripheral_walk().length();
    std::uniform_int_distribution<int> pick(0, n);
    int j = pick(rng), k = pick(rng);
    if (j > k) std::swap(j, k);
    return make_frame(g, j, k);
}

/// The five-vertex fixture used across the tests: a square a-b-c-d with a
/// chord vertex e adjacent to b and d, drawn inside. Ids a=0 b=1 c=2 d=3
/// e=4; the outer walk is (a,b,c,d,a).
inline PlaneGraph chord_square() {
    // counterclockwise rotations for the drawing with e inside the square
    return PlaneGraph(
        {
            {1, 3},          // a: b, d
            {2, 4, 0},       // b: c, e, a
            {3, 1},          // c: d, b
            {0, 4, 2},       // d: a, e, c
            {3, 1},          // e: d, b
        },
        Arc{0, 1});
}

} // namespace netbound::testing
