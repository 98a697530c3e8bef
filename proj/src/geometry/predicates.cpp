#include "pmtower/geometry/predicates.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmtower::geo {

void Box3i::extend(const Vec3i& p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
}

Wide Box3i::diagonal_sq() const {
    if (!valid()) return 0;
    const Vec3i d = hi - lo;
    return dot(d, d);
}

int orient3d(const Vec3i& a, const Vec3i& b, const Vec3i& c, const Vec3i& d) {
    return sign(dot(cross(b - a, c - a), d - a));
}

int point_in_tet(const Vec3i& p, const std::array<Vec3i, 4>& t) {
    const int o = orient3d(t[0], t[1], t[2], t[3]);
    if (o == 0) throw std::invalid_argument("point_in_tet: degenerate tetrahedron");
    // Each face, oriented so the opposite vertex is on the positive side.
    const int s[4] = {orient3d(t[1], t[2], t[3], p) * -o, orient3d(t[0], t[2], t[3], p) * o,
                      orient3d(t[0], t[1], t[3], p) * -o, orient3d(t[0], t[1], t[2], p) * o};
    bool boundary = false;
    for (int v : s) {
        if (v < 0) return -1;
        if (v == 0) boundary = true;
    }
    return boundary ? 0 : 1;
}

namespace {

struct P2 {
    Int u, v;
};

int orient2d(const P2& a, const P2& b, const P2& c) {
    return sign(Wide(b.u - a.u) * (c.v - a.v) - Wide(b.v - a.v) * (c.u - a.u));
}

bool on_segment_2d(const P2& a, const P2& b, const P2& p) {
    return std::min(a.u, b.u) <= p.u && p.u <= std::max(a.u, b.u) && std::min(a.v, b.v) <= p.v &&
           p.v <= std::max(a.v, b.v);
}

bool segments_intersect_2d(const P2& p0, const P2& p1, const P2& q0, const P2& q1) {
    const int d1 = orient2d(q0, q1, p0);
    const int d2 = orient2d(q0, q1, p1);
    const int d3 = orient2d(p0, p1, q0);
    const int d4 = orient2d(p0, p1, q1);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && on_segment_2d(q0, q1, p0)) return true;
    if (d2 == 0 && on_segment_2d(q0, q1, p1)) return true;
    if (d3 == 0 && on_segment_2d(p0, p1, q0)) return true;
    if (d4 == 0 && on_segment_2d(p0, p1, q1)) return true;
    return false;
}

P2 drop_axis(const Vec3i& p, int axis) {
    switch (axis) {
        case 0: return {p.y, p.z};
        case 1: return {p.x, p.z};
        default: return {p.x, p.y};
    }
}

Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

int dominant_axis(const Vec3w& n) {
    const Wide ax = abs_wide(n.x), ay = abs_wide(n.y), az = abs_wide(n.z);
    if (ax >= ay && ax >= az) return 0;
    return ay >= az ? 1 : 2;
}

}  // namespace

bool segments_intersect(const Vec3i& p0, const Vec3i& p1, const Vec3i& q0, const Vec3i& q1) {
    if (orient3d(p0, p1, q0, q1) != 0) return false;
    Vec3w n = cross(p1 - p0, q0 - p0);
    if (n.is_zero()) n = cross(p1 - p0, q1 - p0);
    if (n.is_zero()) n = cross(q1 - q0, p0 - q0);
    if (n.is_zero()) {
        // All four points collinear: compare parameter intervals along the
        // dominant axis of the line direction.
        const Vec3i d = (p1 == p0) ? q1 - q0 : p1 - p0;
        const Vec3w dw = widen(d);
        const int axis = dominant_axis(dw);
        auto coord = [axis](const Vec3i& v) { return v[axis]; };
        if (coord(p0) == coord(p1) && coord(q0) == coord(q1)) return p0 == q0;
        const Int plo = std::min(coord(p0), coord(p1)), phi = std::max(coord(p0), coord(p1));
        const Int qlo = std::min(coord(q0), coord(q1)), qhi = std::max(coord(q0), coord(q1));
        return plo <= qhi && qlo <= phi;
    }
    const int axis = dominant_axis(n);
    return segments_intersect_2d(drop_axis(p0, axis), drop_axis(p1, axis), drop_axis(q0, axis),
                                 drop_axis(q1, axis));
}

}  // namespace pmtower::geo
