#include "pmtower/constructions/plane_split.hpp"

#include <cmath>
#include <string>

#include "pmtower/constructions/torus.hpp"

namespace pmtower::constructions {

AxisPlane AxisPlane::at(int axis, double model_offset, geo::Int scale) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("plane axis must be 0, 1 or 2");
    return {axis, to_lattice({model_offset, 0, 0}, scale).x};
}

SplitTowers plane_split(const tower::Tower& t, const AxisPlane& plane, std::size_t from_level) {
    if (plane.axis < 0 || plane.axis > 2) throw std::invalid_argument("plane axis must be 0, 1 or 2");
    if (from_level > t.depth()) throw std::invalid_argument("plane_split: from_level beyond the tower");
    SplitTowers out;
    // New index of each component of the previous level inside its half.
    std::vector<std::size_t> prev_index;
    std::vector<bool> prev_side;
    for (std::size_t k = from_level; k < t.depth(); ++k) {
        std::vector<tower::Component> lo, hi;
        std::vector<std::size_t> index(t.levels[k].size());
        std::vector<bool> side(t.levels[k].size());
        for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
            const tower::Component& c = t.levels[k][i];
            if (!c.mesh) {
                throw std::invalid_argument("plane_split: level " + std::to_string(k) + " component " +
                                            std::to_string(i) + " has no mesh");
            }
            const geo::Box3i box = c.mesh->bounding_box();
            const int a = plane.axis;
            if (box.hi[a] < plane.offset) {
                side[i] = false;
            } else if (box.lo[a] > plane.offset) {
                side[i] = true;
            } else {
                throw StraddleError(k, i, "plane_split: level " + std::to_string(k) + " component " +
                                              std::to_string(i) + " meets the plane");
            }
            tower::Component copy = c;
            if (k == from_level) {
                copy.parent = tower::kNoParent;
            } else {
                if (c.parent >= prev_index.size()) throw std::invalid_argument("plane_split: broken nesting map");
                if (prev_side[c.parent] != side[i]) {
                    throw StraddleError(k, i, "plane_split: component lies on the other side from its parent");
                }
                copy.parent = prev_index[c.parent];
            }
            auto& dst = side[i] ? hi : lo;
            index[i] = dst.size();
            dst.push_back(std::move(copy));
        }
        out.below.levels.push_back(std::move(lo));
        out.above.levels.push_back(std::move(hi));
        prev_index = std::move(index);
        prev_side = std::move(side);
    }
    return out;
}

}  // namespace pmtower::constructions
