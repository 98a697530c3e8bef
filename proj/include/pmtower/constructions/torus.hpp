#pragma once

#include <cstddef>
#include <vector>

#include "pmtower/complex/simplicial_complex.hpp"
#include "pmtower/geometry/vec.hpp"

namespace pmtower::constructions {

/// Shape of one link inside its host solid torus, in units of the host tube
/// radius. The link core is a stadium (two segments parallel to the host core
/// joined by semicircular caps of radius `width`) lying in the plane spanned
/// by the host core direction and one cross-section axis; its tube is a disk
/// of radius `tube`.
struct LinkShape {
    double width = 0.6;
    double tube = 0.22;

    friend bool operator==(const LinkShape&, const LinkShape&) = default;
};

/// Position of a child link among `count` siblings. `host_ratio` is the host's
/// core length per radian over its tube radius, so that host tube coordinates
/// scaled by it along the core are close to isometric. Link j is centered at
/// angle 2 pi j / count; its straight half-length is pi host_ratio / count, so
/// consecutive links overlap by one cap radius.
struct Placement {
    std::size_t index = 0;
    std::size_t count = 0;
    LinkShape shape;
    double host_ratio = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
};

/// A solid torus: the round torus described by the base fields, then pushed
/// through the placement chain (outermost first). An empty chain is the plain
/// round torus.
struct TorusSpec {
    geo::Vec3d core_center{0, 0, 0};  // model units
    geo::Vec3i frame_u{1, 0, 0};      // core plane, integer directions
    geo::Vec3i frame_v{0, 1, 0};
    double core_radius = 3.0;
    double minor_radius = 1.0;
    std::size_t n_u = 16;  // slices around the core
    std::size_t n_v = 6;   // cross-section sectors (2 n_v boundary points)
    std::vector<Placement> placements;

    friend bool operator==(const TorusSpec&, const TorusSpec&) = default;
};

// Throws std::invalid_argument when a TorusSpec invariant fails: radii,
// frame orthogonality, resolutions >= 3, or an invalid placement.
void validate(const TorusSpec& spec);
void validate(const Placement& p);

// Core length per radian over tube radius: core_radius / minor_radius for the
// round base, the link core perimeter over 2 pi tube for a placed link.
double aspect_ratio(const TorusSpec& spec);

// Straight half-length of a placed link, in host tube radii.
double straight_half_length(const Placement& p);

// Slices a link needs so that caps get kCapSlices each and straight parts
// one slice per kStraightSpacing host tube radii.
inline constexpr std::size_t kCapSlices = 12;
inline constexpr double kStraightSpacing = 0.75;
std::size_t natural_slices(const Placement& p);

// Point of the link core in host coordinates scaled to be near-isometric:
// (angle around the host core * host_ratio, cross-section x, y), all in host
// tube radii.
geo::Vec3d link_core_in_host(const Placement& p, double angle);

// Point of the solid torus in model coordinates from tube coordinates:
// `angle` around the core, (x, y) in the closed unit disk.
geo::Vec3d torus_point(const TorusSpec& spec, double angle, double x, double y);

geo::Vec3i to_lattice(const geo::Vec3d& p, geo::Int scale);

/// Tetrahedralised solid torus. The cross-section is the 2 n_v-gon inscribed
/// in the unit disk, split into n_v kite quads around the center; every
/// quad x slice-interval cell is cut into 6 tetrahedra with the Kuhn rule in
/// local axes (quad a, quad b, slice). 6 n_u n_v tetrahedra in total.
/// Throws if the lattice rounding merges vertices or exceeds the coordinate
/// limit at the given scale.
complex::SimplicialComplex3 build_solid_torus(const TorusSpec& spec, geo::Int scale);

/// The core as a closed n_u-gon (cross-section centers of the slices), on
/// the same lattice as build_solid_torus.
std::vector<geo::Vec3i> torus_core(const TorusSpec& spec, geo::Int scale);

// Number of tetrahedra build_solid_torus produces.
inline std::size_t torus_tet_count(const TorusSpec& spec) { return 6 * spec.n_u * spec.n_v; }

}  // namespace pmtower::constructions
