#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pmtower/constructions/necklace.hpp"
#include "pmtower/report.hpp"

namespace pmtower::constructions {

inline constexpr const char* kSpecSchema = "pmtower.spec/1";

struct CellSpec {
    std::vector<geo::Vec3d> points;
    std::size_t depth = 1;
    geo::Int scale = 0;  // 0 picks default_scale()
};

/// A generator request. Common keys: "schema", "kind" ("necklace" or
/// "cells"), optional "geometry" (default true: write meshes) and optional
/// "declared_r". Unknown keys are rejected.
///
/// necklace: "n", "depth", "shape" {"width", "tube"}, "resolutions"
///   [{"n_u", "n_v"}] (n_u = 0: automatic), "base" {"core_center",
///   "frame_u", "frame_v", "core_radius", "minor_radius"}, "roots",
///   "root_spacing", "scale", "budget", "complement_not_simply_connected";
///   all optional except "n" and "depth".
/// cells: "points" [[x, y, z], ...], "depth", optional "scale".
struct GenerateSpec {
    std::variant<NecklaceSpec, CellSpec> object;
    bool geometry = true;
    std::optional<std::size_t> declared_r;
};

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

GenerateSpec spec_from_json(const nlohmann::json& j);
Json to_json(const GenerateSpec& s);

}  // namespace pmtower::constructions
