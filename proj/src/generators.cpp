#include "netbound/generators.hpp"

#include <array>
#include <random>

namespace netbound {

PlaneGraph make_square_grid(int n) {
    if (n < 2) throw BadParameter("square grid needs n >= 2");
    const auto id = [n](int r, int c) { return r * n + c; };
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            auto& l = rot[static_cast<std::size_t>(id(r, c))];
            // Counterclockwise from east: E, N, W, S.
            if (c + 1 < n) l.push_back(id(r, c + 1));
            if (r + 1 < n) l.push_back(id(r + 1, c));
            if (c > 0) l.push_back(id(r, c - 1));
            if (r > 0) l.push_back(id(r - 1, c));
        }
    }
    return PlaneGraph(std::move(rot), Arc{id(0, 0), id(0, 1)});
}

PlaneGraph make_triangular_grid(int n) {
    if (n < 2) throw BadParameter("triangular grid needs n >= 2");
    // Row r (0 = bottom) holds n - r vertices; (r, p) sits at
    // x = p + r/2, y = r * sqrt(3)/2.
    std::vector<int> rowStart(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r < n; ++r) rowStart[static_cast<std::size_t>(r) + 1] = rowStart[static_cast<std::size_t>(r)] + (n - r);
    const int total = rowStart[static_cast<std::size_t>(n)];
    const auto id = [&rowStart](int r, int p) { return rowStart[static_cast<std::size_t>(r)] + p; };

    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(total));
    for (int r = 0; r < n; ++r) {
        const int len = n - r;
        for (int p = 0; p < len; ++p) {
            auto& l = rot[static_cast<std::size_t>(id(r, p))];
            // Counterclockwise from east: E, NE, NW, W, SW, SE.
            if (p + 1 < len) l.push_back(id(r, p + 1));
            if (r + 1 < n && p < n - r - 1) l.push_back(id(r + 1, p));
            if (r + 1 < n && p - 1 >= 0) l.push_back(id(r + 1, p - 1));
            if (p > 0) l.push_back(id(r, p - 1));
            if (r > 0) l.push_back(id(r - 1, p));
            if (r > 0 && p + 1 < n - r + 1) l.push_back(id(r - 1, p + 1));
        }
    }
    return PlaneGraph(std::move(rot), Arc{0, 1});
}

PlaneGraph make_cycle(int n) {
    if (n < 3) throw BadParameter("cycle needs n >= 3");
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rot[static_cast<std::size_t>(i)] = {(i + 1) % n, (i - 1 + n) % n};
    return PlaneGraph(std::move(rot), Arc{0, 1});
}

PlaneGraph make_random_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw BadParameter("triangulation needs n >= 3");
    std::mt19937_64 rng(seed);

    // Embedded triangle 0, 1, 2 (counterclockwise); bounded faces are kept
    // as corner triples in the clockwise order their facial walks use.
    std::vector<std::vector<Vertex>> rot = {{1, 2}, {2, 0}, {0, 1}};
    std::vector<std::array<Vertex, 3>> face = {{0, 2, 1}};

    const auto insert_after = [&rot](Vertex at, Vertex after, Vertex nv) {
        auto& l = rot[static_cast<std::size_t>(at)];
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i] == after) {
                l.insert(l.begin() + static_cast<std::ptrdiff_t>(i) + 1, nv);
                return;
            }
        }
        throw InternalError("triangulation corner lost its wedge neighbor");
    };

    for (Vertex nv = 3; nv < n; ++nv) {
        std::uniform_int_distribution<std::size_t> pick(0, face.size() - 1);
        const std::size_t fi = pick(rng);
        const auto [a, b, c] = face[fi];
        // Spokes leave nv counterclockwise in reverse walk order; at each
        // corner the new spoke slots in right after the walk predecessor.
        rot.push_back({c, b, a});
        insert_after(a, c, nv);
        insert_after(b, a, nv);
        insert_after(c, b, nv);
        face[fi] = {a, b, nv};
        face.push_back({b, c, nv});
        face.push_back({c, a, nv});
    }
    return PlaneGraph(std::move(rot), Arc{0, 1});
}

} // namespace netbound
