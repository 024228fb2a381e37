#pragma once

#include <cstdint>

#include "netbound/plane_graph.hpp"

namespace netbound {

/// n x n square grid, n >= 2. Vertex (row r, column c) has id r*n + c;
/// rotations list neighbors counterclockwise starting east; the anchor is
/// the arc (0,0) -> (0,1), so the peripheral walk has length 4(n-1).
PlaneGraph make_square_grid(int n);

/// Triangular grid with n vertices on each side, n >= 2 (rows of n, n-1,
/// ..., 1 vertices bottom-up, ids row-major from the bottom). The anchor is
/// the arc 0 -> 1 along the bottom side; the peripheral walk has length
/// 3(n-1) and its three straight sides meet at the corners.
PlaneGraph make_triangular_grid(int n);

/// Cycle c_0, ..., c_{n-1} embedded counterclockwise, n >= 3, anchored at
/// c_0 -> c_1 (the bounded disk is the other face).
PlaneGraph make_cycle(int n);

/// Random planar triangulation with n >= 3 vertices: start from a triangle
/// and repeatedly insert a vertex into a uniformly chosen bounded face,
/// joined to that face's three corners (a stacked / Apollonian
/// triangulation). Deterministic for a fixed seed.
PlaneGraph make_random_triangulation(int n, std::uint64_t seed);

} // namespace netbound
