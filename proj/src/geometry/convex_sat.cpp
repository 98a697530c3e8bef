#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pmtower/geometry/predicates.hpp"

namespace pmtower::geo {

namespace {

// Projection interval of a point set onto an axis.
struct Span {
    Wide lo, hi;
};

Span project(const Vec3w& axis, std::span<const Vec3i> pts) {
    Span s{dot(axis, pts[0]), dot(axis, pts[0])};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Wide v = dot(axis, pts[i]);
        s.lo = std::min(s.lo, v);
        s.hi = std::max(s.hi, v);
    }
    return s;
}

bool separates(const Vec3w& axis, std::span<const Vec3i> a, std::span<const Vec3i> b) {
    if (axis.is_zero()) return false;
    const Span sa = project(axis, a);
    const Span sb = project(axis, b);
    return sa.hi < sb.lo || sb.hi < sa.lo;
}

void push_face_normals(std::span<const Vec3i> s, std::vector<Vec3w>& axes) {
    if (s.size() == 3) {
        axes.push_back(cross(s[1] - s[0], s[2] - s[0]));
    } else if (s.size() == 4) {
        axes.push_back(cross(s[1] - s[0], s[2] - s[0]));
        axes.push_back(cross(s[1] - s[0], s[3] - s[0]));
        axes.push_back(cross(s[2] - s[0], s[3] - s[0]));
        axes.push_back(cross(s[2] - s[1], s[3] - s[1]));
    }
}

void collect_edges(std::span<const Vec3i> s, std::vector<Vec3i>& edges) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) edges.push_back(s[j] - s[i]);
    }
}

}  // namespace

// Separating-axis test. The Minkowski difference A - B of two convex
// polytopes is a polytope whose facet normals are face normals of A, face
// normals of B, or cross products of an edge of A with an edge of B. When
// A - B is full-dimensional the hulls are disjoint iff the origin lies
// strictly outside one of those facets, which is what the axis loop checks.
bool simplices_intersect(std::span<const Vec3i> a, std::span<const Vec3i> b) {
    if (a.size() < 2 || a.size() > 4 || b.size() < 2 || b.size() > 4) {
        throw std::invalid_argument("simplices_intersect: expects simplices of dimension 1..3");
    }
    if (a.size() != 4 && b.size() != 4) {
        throw std::invalid_argument("simplices_intersect: one operand must be a tetrahedron");
    }
    std::vector<Vec3w> axes;
    axes.reserve(8 + 36);
    push_face_normals(a, axes);
    push_face_normals(b, axes);
    std::vector<Vec3i> ea, eb;
    collect_edges(a, ea);
    collect_edges(b, eb);
    for (const Vec3i& x : ea) {
        for (const Vec3i& y : eb) axes.push_back(cross(x, y));
    }
    for (const Vec3w& axis : axes) {
        if (separates(axis, a, b)) return false;
    }
    return true;
}

}  // namespace pmtower::geo
