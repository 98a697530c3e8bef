#pragma once

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "pmtower/report.hpp"
#include "pmtower/tower/tower.hpp"

namespace pmtower::tower {

inline constexpr const char* kTowerSchema = "pmtower.tower/1";
inline constexpr const char* kRuleSchema = "pmtower.rule/1";

/// Malformed descriptor or rule document.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Descriptor layout (keys in this order, optional keys omitted when unset):
//   {"schema": "pmtower.tower/1", "declared_r": r,
//    "complement_not_simply_connected": bool, "substitution_rule": {...},
//    "levels": [[{"rank": k, "is_cell": b, "parent": p|null, "mesh_ref": "..."}]]}
// Structural conditions are not enforced on input; validate_tower reports them.
Json to_json(const Tower& t);
Tower tower_from_json(const nlohmann::json& j);

//   {"schema": "pmtower.rule/1",
//    "types": [{"name": s, "children": [s...], "rank": k, "is_cell": b}]}
Json to_json(const SubstitutionRule& r);
SubstitutionRule rule_from_json(const nlohmann::json& j);

// Parses a JSON file; throws SchemaError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& p);

// Loads every non-empty mesh_ref (".tets.json" or ".off") relative to `base`.
// Throws SchemaError when a reference cannot be read.
void load_meshes(Tower& t, const std::filesystem::path& base);

}  // namespace pmtower::tower
