#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "pmtower/geometry/vec.hpp"
#include "pmtower/tower/tower.hpp"

namespace pmtower::constructions {

/// Plane {x : x[axis] = offset}, offset in lattice units of the tower meshes.
struct AxisPlane {
    int axis = 0;  // 0, 1, 2
    geo::Int offset = 0;

    // Plane at a model-unit offset, rounded to the lattice at `scale`.
    static AxisPlane at(int axis, double model_offset, geo::Int scale);
};

class StraddleError : public std::invalid_argument {
public:
    StraddleError(std::size_t lvl, std::size_t comp, const std::string& what)
        : std::invalid_argument(what), level(lvl), component(comp) {}
    std::size_t level, component;
};

struct SplitTowers {
    tower::Tower below;  // components with every point at x[axis] < offset
    tower::Tower above;  // components with every point at x[axis] > offset
};

/// Partitions the components of levels from_level..depth by side of the
/// plane; the halves are re-rooted at from_level (default 0: the whole
/// tower). A component whose mesh meets the plane raises StraddleError.
/// Every kept component must carry a mesh (std::invalid_argument otherwise).
/// Ranks, cell flags and mesh references are carried over; declared_r,
/// the complement flag and the rule describe the whole set and are dropped.
SplitTowers plane_split(const tower::Tower& t, const AxisPlane& plane, std::size_t from_level = 0);

}  // namespace pmtower::constructions
