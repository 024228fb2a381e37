#include "netbound/frame.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace netbound {

const char* color_name(SideColor c) {
    switch (c) {
        case SideColor::Blue: return "blue";
        case SideColor::Red: return "red";
        case SideColor::Yellow: return "yellow";
    }
    return "?";
}

Frame3::Frame3(FaceWalk walk, int j, int k, int vertex_count) : walk_(std::move(walk)), j_(j), k_(k) {
    const int n = walk_.length();
    if (n < 0 || walk_.verts.empty())
        throw BadParameter("frame walk must be nonempty");
    if (n >= 1 && walk_.verts.front() != walk_.verts.back())
        throw BadParameter("frame walk must be closed");
    if (j < 0 || k < j || k > n)
        throw IndexOutOfRange("frame indices must satisfy 0 <= j <= k <= " + std::to_string(n));
    for (Vertex v : walk_.verts)
        if (v < 0 || v >= vertex_count)
            throw IndexOutOfRange("walk vertex " + std::to_string(v) + " out of range");

    vertex_colors_.assign(static_cast<std::size_t>(vertex_count), 0);
    for (int i = 0; i <= n; ++i) {
        const Vertex v = walk_.verts[static_cast<std::size_t>(i)];
        vertex_colors_[static_cast<std::size_t>(v)] |= colors_at(i);
    }
    for (int c = 0; c < 3; ++c) {
        for (Vertex v = 0; v < vertex_count; ++v)
            if (vertex_colors_[static_cast<std::size_t>(v)] & color_bit(static_cast<SideColor>(c)))
                sides_[static_cast<std::size_t>(c)].push_back(v);
    }
}

ColorMask Frame3::colors_at(int i) const {
    const int n = walk_.length();
    if (i < 0 || i > n) throw IndexOutOfRange("walk position " + std::to_string(i) + " out of range");
    if (n == 0) return kAllColors;
    ColorMask m = 0;
    if (i <= j_) m |= color_bit(SideColor::Blue);
    if (i >= j_ && i <= k_) m |= color_bit(SideColor::Red);
    if (i >= k_) m |= color_bit(SideColor::Yellow);
    return m;
}

ColorMask Frame3::colors_of(Vertex v) const {
    if (v < 0 || v >= static_cast<int>(vertex_colors_.size()))
        throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
    return vertex_colors_[static_cast<std::size_t>(v)];
}

Frame3 make_frame(const PlaneGraph& g, int j, int k) {
    return Frame3(g.peripheral_walk(), j, k, g.vertex_count());
}

Frame3 default_frame(const PlaneGraph& g) {
    const int n = g.peripheral_walk().length();
    return Frame3(g.peripheral_walk(), n / 3, 2 * n / 3, g.vertex_count());
}

bool is_vine(const PlaneGraph& g, const Frame3& f, const std::vector<Vertex>& x) {
    if (x.empty()) return false;
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : x) {
        if (v < 0 || v >= g.vertex_count())
            throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    // Connectivity of the induced subgraph.
    std::queue<Vertex> q;
    q.push(x.front());
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    seen[static_cast<std::size_t>(x.front())] = 1;
    ColorMask met = 0;
    int reached = 0;
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        ++reached;
        met |= f.colors_of(v);
        for (Vertex u : g.rotation(v))
            if (in[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                q.push(u);
            }
    }
    int total = 0;
    for (char c : in) total += c;
    return reached == total && met == kAllColors;
}

bool verify_cover(const PlaneGraph& g, const Frame3& f, const std::vector<Vertex>& cover) {
    const int n = g.vertex_count();
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (Vertex v : cover) {
        if (v < 0 || v >= n)
            throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
        removed[static_cast<std::size_t>(v)] = 1;
    }
    // A vine avoiding the cover exists iff some remaining component still
    // meets all three sides.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (removed[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        ColorMask met = 0;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            met |= f.colors_of(v);
            for (Vertex u : g.rotation(v))
                if (!removed[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    q.push(u);
                }
        }
        if (met == kAllColors) return false;
    }
    return true;
}

bool crosses(const FaceWalk& w, std::pair<int, int> a, std::pair<int, int> b) {
    const int n = w.length();
    for (int i : {a.first, a.second, b.first, b.second})
        if (i < 0 || i > n) throw IndexOutOfRange("walk position " + std::to_string(i) + " out of range");
    auto [a1, a2] = std::minmax(a.first, a.second);
    auto [b1, b2] = std::minmax(b.first, b.second);
    // {b1, b2} crosses {a1, a2} iff exactly one of b1, b2 lies inside the
    // open interval (a1, a2) — or they share an endpoint.
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return true;
    const bool b1in = a1 < b1 && b1 < a2;
    const bool b2in = a1 < b2 && b2 < a2;
    return b1in != b2in;
}

} // namespace netbound
