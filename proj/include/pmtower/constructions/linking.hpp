#pragma once

#include <vector>

#include "pmtower/geometry/vec.hpp"

namespace pmtower::constructions {

/// Closed polygonal curve on the integer lattice; the last point connects back
/// to the first.
struct PolyCurve {
    std::vector<geo::Vec3i> points;
};

// Throws std::invalid_argument unless the curve has >= 3 points, consecutive
// points differ and no two segments meet except adjacent ones at their shared
// endpoint.
void validate_simple(const PolyCurve& c);

// Exact test: some segment of `a` meets some segment of `b`.
bool curves_intersect(const PolyCurve& a, const PolyCurve& b);

struct LinkingResult {
    int value = 0;
    geo::Vec3i direction;  // projection direction that was accepted
};

/// Linking number from signed crossings in a generic parallel projection.
/// Directions are tried from a fixed list of primitive integer vectors; a
/// direction is skipped when some segment projects to a point or a crossing
/// is not transverse (vertex on a segment, collinear overlap). Throws
/// std::invalid_argument if the curves intersect, std::runtime_error if no
/// listed direction is generic.
LinkingResult linking_number(const PolyCurve& a, const PolyCurve& b);

// Candidate projection directions, in the order they are tried.
const std::vector<geo::Vec3i>& projection_directions();

}  // namespace pmtower::constructions
