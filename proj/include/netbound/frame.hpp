#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "netbound/plane_graph.hpp"

namespace netbound {

/// The three sides of a frame, in their cyclic order along the walk.
enum class SideColor : std::uint8_t { Blue = 0, Red = 1, Yellow = 2 };

/// Bitmask over SideColor (bit i = color i).
using ColorMask = std::uint8_t;

constexpr ColorMask color_bit(SideColor c) {
    return static_cast<ColorMask>(1u << static_cast<unsigned>(c));
}
constexpr ColorMask kAllColors = 0b111;

const char* color_name(SideColor c);

// ═══════════════════════════════════════════════════════════════════════════
// Frame3
// ═══════════════════════════════════════════════════════════════════════════

/// A 3-frame on a closed peripheral walk W = (u_0, ..., u_n), u_0 == u_n:
/// two split indices 0 <= j <= k <= n cut the walk into three closed sides,
///   blue   = u_0 .. u_j,
///   red    = u_j .. u_k,
///   yellow = u_k .. u_n (= u_0).
/// Adjacent sides share their boundary vertex; a vertex occurring in several
/// stretches of the walk carries the union of the colors of all its
/// occurrences. A one-vertex walk (n == 0) gives that vertex all three
/// colors.
class Frame3 {
public:
    /// `vertex_count` sizes the per-vertex color table; every walk vertex
    /// must be a valid id of the underlying graph.
    Frame3(FaceWalk walk, int j, int k, int vertex_count);

    const FaceWalk& walk() const { return walk_; }
    int j() const { return j_; }
    int k() const { return k_; }
    /// Walk length (index of the final, repeated vertex).
    int n() const { return walk_.length(); }

    /// Colors of walk position i (0 <= i <= n).
    ColorMask colors_at(int i) const;

    /// Union of colors over all occurrences of v on the walk (0 if v is not
    /// a walk vertex).
    ColorMask colors_of(Vertex v) const;

    bool in_side(Vertex v, SideColor c) const { return colors_of(v) & color_bit(c); }

    /// Distinct vertices of one side, ascending.
    const std::vector<Vertex>& side_vertices(SideColor c) const {
        return sides_[static_cast<std::size_t>(c)];
    }

private:
    FaceWalk walk_;
    int j_ = 0;
    int k_ = 0;
    std::vector<ColorMask> vertex_colors_;
    std::array<std::vector<Vertex>, 3> sides_;
};

/// Frame on g's peripheral walk with explicit split indices.
Frame3 make_frame(const PlaneGraph& g, int j, int k);

/// Frame splitting g's peripheral walk into thirds: j = floor(n/3),
/// k = floor(2n/3).
Frame3 default_frame(const PlaneGraph& g);

// ═══════════════════════════════════════════════════════════════════════════
// Vines and covers
// ═══════════════════════════════════════════════════════════════════════════

/// A vine is a nonempty vertex set that induces a connected subgraph and
/// meets all three sides of the frame. The net of (g, f) is the family of
/// all vines; it is a bramble whose order bounds the bramble number of g
/// from below.
bool is_vine(const PlaneGraph& g, const Frame3& f, const std::vector<Vertex>& x);

/// True iff `cover` meets every vine of (g, f) — equivalently, no connected
/// component of g minus `cover` still touches all three sides.
bool verify_cover(const PlaneGraph& g, const Frame3& f, const std::vector<Vertex>& cover);

/// Whether the walk-position pairs {a1, a2} and {b1, b2} interleave on the
/// closed walk (each pair's chord separates the other's endpoints, with
/// shared positions counting as crossing). Positions are walk indices in
/// [0, w.length()].
bool crosses(const FaceWalk& w, std::pair<int, int> a, std::pair<int, int> b);

} // namespace netbound
