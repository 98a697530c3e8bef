#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pmtower/geometry/vec.hpp"

namespace pmtower::complex {

using Index = std::uint32_t;
using Edge = std::array<Index, 2>;
using Triangle = std::array<Index, 3>;
using Tet = std::array<Index, 4>;

/// Finite simplicial complex of dimension <= 3 embedded with exact integer
/// coordinates. Coordinates are expressed in units of 1/scale of a model unit.
///
/// Construction canonicalises every simplex (ascending vertex indices), closes
/// the set under faces and sorts each simplex table lexicographically, so the
/// row/column order of boundary matrices depends only on the input sets.
/// Instances are immutable once built.
class SimplicialComplex3 {
public:
    SimplicialComplex3() = default;

    /// Validates and closes under faces. `triangles` and `edges` list extra
    /// maximal simplices not already implied by `tets`. Throws
    /// std::invalid_argument on a repeated index inside a simplex, an index
    /// out of range, duplicate vertex coordinates, a non-positive scale or a
    /// coordinate beyond geo::kCoordLimit.
    static SimplicialComplex3 create(std::vector<geo::Vec3i> vertices, std::span<const Tet> tets,
                                     std::span<const Triangle> triangles = {},
                                     std::span<const Edge> edges = {}, geo::Int scale = 1);

    geo::Int scale() const noexcept { return scale_; }
    const std::vector<geo::Vec3i>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    const std::vector<Tet>& tets() const noexcept { return tets_; }

    std::size_t count(int dim) const;
    bool empty() const noexcept { return vertices_.empty(); }

    // Position of a simplex in its table; throws std::out_of_range if absent.
    std::size_t edge_index(const Edge& e) const;
    std::size_t triangle_index(const Triangle& t) const;

    // Triangles that are a face of exactly one tetrahedron, plus maximal
    // triangles. Oriented so that the owning tetrahedron lies on the negative
    // side (outward normal by the right-hand rule).
    std::vector<Triangle> boundary_triangles() const;

    std::array<geo::Vec3i, 4> tet_points(std::size_t t) const;
    geo::Box3i bounding_box() const;

    // Copy with every coordinate multiplied by `factor` (> 0) and the scale
    // multiplied likewise.
    SimplicialComplex3 scaled(geo::Int factor) const;

private:
    geo::Int scale_ = 1;
    std::vector<geo::Vec3i> vertices_;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    std::vector<Tet> tets_;
};

}  // namespace pmtower::complex
