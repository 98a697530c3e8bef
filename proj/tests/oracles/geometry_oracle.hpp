#pragma once

// Tetrahedron intersection by feature enumeration: two closed tetrahedra meet
// iff a vertex of one lies in the other or an edge of one meets a triangle of
// the other. Independent of the separating-axis implementation under test.

#include <array>

#include "pmtower/geometry/predicates.hpp"

namespace oracle {

using pmtower::geo::Vec3i;
using Tet = std::array<Vec3i, 4>;

// Closed segment vs closed non-degenerate triangle, exact.
inline bool segment_meets_triangle(const Vec3i& p, const Vec3i& q, const Vec3i& a, const Vec3i& b, const Vec3i& c) {
    using pmtower::geo::orient3d;
    using pmtower::geo::segments_intersect;
    const int sp = orient3d(a, b, c, p), sq = orient3d(a, b, c, q);
    if (sp == 0 && sq == 0) {
        // Coplanar: segment meets the triangle iff an endpoint is inside it or
        // the segment crosses one of its edges.
        if (segments_intersect(p, q, a, b) || segments_intersect(p, q, b, c) || segments_intersect(p, q, c, a)) {
            return true;
        }
        // A point off the plane turns each edge into a plane through that edge;
        // x is inside when it sits on the same side of all three.
        const auto n = pmtower::geo::cross(b - a, c - a);
        const Vec3i off = a + Vec3i{pmtower::geo::sign(n.x), pmtower::geo::sign(n.y), pmtower::geo::sign(n.z)};
        auto inside = [&](const Vec3i& x) {
            const int s1 = orient3d(a, b, off, x), s2 = orient3d(b, c, off, x), s3 = orient3d(c, a, off, x);
            return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
        };
        return inside(p) || inside(q);
    }
    if (sp * sq > 0) return false;
    // The segment crosses or touches the plane; check the crossing point is in
    // the triangle with the three edge orientations.
    const int s1 = orient3d(p, q, a, b), s2 = orient3d(p, q, b, c), s3 = orient3d(p, q, c, a);
    return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

inline bool tets_intersect(const Tet& s, const Tet& t) {
    for (const auto& v : s) {
        if (pmtower::geo::point_in_tet(v, t) >= 0) return true;
    }
    for (const auto& v : t) {
        if (pmtower::geo::point_in_tet(v, s) >= 0) return true;
    }
    static constexpr int kEdges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    static constexpr int kFaces[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    auto edge_face = [&](const Tet& x, const Tet& y) {
        for (const auto& e : kEdges) {
            for (const auto& f : kFaces) {
                if (segment_meets_triangle(x[e[0]], x[e[1]], y[f[0]], y[f[1]], y[f[2]])) return true;
            }
        }
        return false;
    };
    return edge_face(s, t) || edge_face(t, s);
}

}  // namespace oracle
