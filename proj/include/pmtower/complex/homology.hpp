#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pmtower/complex/simplicial_complex.hpp"
#include "pmtower/gf2/bit_matrix.hpp"

namespace pmtower::complex {

struct BettiVector {
    std::size_t b0 = 0, b1 = 0, b2 = 0, b3 = 0;

    std::int64_t euler() const {
        return static_cast<std::int64_t>(b0) - static_cast<std::int64_t>(b1) +
               static_cast<std::int64_t>(b2) - static_cast<std::int64_t>(b3);
    }
    BettiVector& operator+=(const BettiVector& o) {
        b0 += o.b0;
        b1 += o.b1;
        b2 += o.b2;
        b3 += o.b3;
        return *this;
    }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

// Matrix of the simplicial boundary map from d-simplices (columns) to
// (d-1)-simplices (rows) over GF(2). d must be 1, 2 or 3.
gf2::BitMatrix boundary_matrix(const SimplicialComplex3& c, int d);

// Z2 Betti numbers. The complex is split into connected components first and
// each block is reduced on its own; b0 is cross-checked against a union-find
// count (std::logic_error on disagreement).
BettiVector betti(const SimplicialComplex3& c);

// V - E + F - T.
std::int64_t euler_characteristic(const SimplicialComplex3& c);

// Connected components of the 1-skeleton; returns the component id per vertex
// (ids are 0..k-1 in order of first vertex).
std::vector<std::size_t> vertex_components(const SimplicialComplex3& c, std::size_t* count = nullptr);

}  // namespace pmtower::complex
