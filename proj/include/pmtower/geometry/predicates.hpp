#pragma once

#include <span>

#include "pmtower/geometry/vec.hpp"

namespace pmtower::geo {

// Sign of det[b-a, c-a, d-a]: positive when d lies on the side of plane (a,b,c)
// that the right-hand normal (b-a)x(c-a) points to.
int orient3d(const Vec3i& a, const Vec3i& b, const Vec3i& c, const Vec3i& d);

// Closed point-in-tetrahedron test; 1 interior, 0 on the boundary, -1 outside.
// The tetrahedron must be non-degenerate.
int point_in_tet(const Vec3i& p, const std::array<Vec3i, 4>& tet);

// Closed segment-segment intersection in 3D.
bool segments_intersect(const Vec3i& p0, const Vec3i& p1, const Vec3i& q0, const Vec3i& q1);

// Exact test on closed convex hulls of small point sets (a simplex of dimension
// 1..3 each). True when the hulls share at least one point.
bool simplices_intersect(std::span<const Vec3i> a, std::span<const Vec3i> b);

}  // namespace pmtower::geo
