#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pmtower/geometry/vec.hpp"
#include "pmtower/tower/tower.hpp"

namespace pmtower::constructions {

/// Tower of thickened-interval boxes around collinear points. Level 0 is one
/// box around all points; each further level halves every group of two or
/// more points (a single point keeps one, smaller box). Boxes are slabs along
/// the line direction: margin m_k = gap/2^(k+2) beyond the outer points and a
/// square cross-section of half-width m_k, 6 tetrahedra each. Every component
/// is a cell of rank 0.
///
/// Points are in model units and are rounded to the lattice at `scale`
/// (0 picks default_scale()). Throws std::invalid_argument when the lattice
/// points are not pairwise distinct, not collinear, or too close for the
/// requested depth (the smallest gap must be at least 2^(depth+2) lattice
/// steps along the line).
tower::Tower build_cell_tower(const std::vector<geo::Vec3d>& points, std::size_t depth, geo::Int scale = 0);

}  // namespace pmtower::constructions
