#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pmtower/complex/simplicial_complex.hpp"

namespace pmtower::complex {

// OFF surface export, one line per item:
//   OFF
//   # pmtower scale=<scale>
//   <V> <F> 0
//   <x> <y> <z>            (V lines, integer coordinates in 1/scale units)
//   3 <i> <j> <k>          (F lines, boundary triangles, outward orientation)
// All vertices are written so indices match the tetrahedral mesh.
void write_off(std::ostream& os, const SimplicialComplex3& c);

// Reads an OFF file back as a pure 2-complex (vertices + triangles). Faces with
// more than three corners are fan-triangulated. The scale comment is honoured
// when present. When the file has faces, vertices no face uses are dropped.
// Throws std::invalid_argument on malformed input.
SimplicialComplex3 read_off(std::istream& is);

// Raw tetrahedra JSON, keys in this order:
//   {"format": "pmtower.tets/1", "scale": S,
//    "vertices": [[x,y,z], ...], "tets": [[a,b,c,d], ...],
//    "triangles": [[a,b,c], ...], "edges": [[a,b], ...]}
// "triangles"/"edges" list only maximal simplices that are not faces of a
// listed tet/triangle; both may be omitted on input.
nlohmann::ordered_json to_tets_json(const SimplicialComplex3& c);
SimplicialComplex3 from_tets_json(const nlohmann::json& j);

inline constexpr const char* kTetsFormat = "pmtower.tets/1";

}  // namespace pmtower::complex
