#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmtower/complex/simplicial_complex.hpp"

namespace pmtower::complex {

struct OverlapWitness {
    std::size_t part_a = 0, tet_a = 0;
    std::size_t part_b = 0, tet_b = 0;
};

struct DisjointnessResult {
    bool disjoint = true;
    std::optional<OverlapWitness> witness;
};

/// True iff no tetrahedron of one part meets (closed sets) a tetrahedron of
/// another part. Exact: bounding-box prefilter, then a separating-axis test on
/// integer coordinates.
DisjointnessResult pairwise_disjoint(std::span<const SimplicialComplex3> parts);

// Same test for exactly two parts; the witness uses part indices 0 and 1.
DisjointnessResult disjoint(const SimplicialComplex3& a, const SimplicialComplex3& b);

class OverlapError : public std::invalid_argument {
public:
    OverlapError(const OverlapWitness& w, const std::string& what)
        : std::invalid_argument(what), witness(w) {}
    OverlapWitness witness;
};

/// Concatenation with reindexed vertices. Parts must share a scale and be
/// pairwise disjoint (OverlapError otherwise).
SimplicialComplex3 disjoint_union(std::span<const SimplicialComplex3> parts);

struct ContainmentResult {
    bool contained = true;
    std::string reason;  // empty when contained
};

/// `inner` lies in the interior of `outer`: every vertex of `inner` is inside
/// some tetrahedron of `outer`, and no tetrahedron of `inner` meets a boundary
/// triangle of `outer`.
ContainmentResult strictly_inside(const SimplicialComplex3& inner, const SimplicialComplex3& outer);

}  // namespace pmtower::complex
