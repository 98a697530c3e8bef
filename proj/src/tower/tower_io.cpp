#include "pmtower/tower/tower_io.hpp"

#include <fstream>

#include "pmtower/complex/mesh_io.hpp"

namespace pmtower::tower {

namespace {

std::size_t get_count(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) throw SchemaError(std::string(what) + ": expected an integer");
    if (j.is_number_integer() && j.get<long long>() < 0) throw SchemaError(std::string(what) + ": must be nonnegative");
    return j.get<std::size_t>();
}

bool get_bool(const nlohmann::json& j, const char* what) {
    if (!j.is_boolean()) throw SchemaError(std::string(what) + ": expected a boolean");
    return j.get<bool>();
}

}  // namespace

Json to_json(const SubstitutionRule& r) {
    Json j;
    j["schema"] = kRuleSchema;
    Json types = Json::array();
    for (const auto& t : r.types) {
        types.push_back({{"name", t.name}, {"children", t.children}, {"rank", t.rank}, {"is_cell", t.is_cell}});
    }
    j["types"] = types;
    return j;
}

SubstitutionRule rule_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("rule: expected an object");
    if (j.contains("schema") && j["schema"] != kRuleSchema) throw SchemaError("rule: unsupported schema");
    if (!j.contains("types") || !j["types"].is_array()) throw SchemaError("rule: 'types' must be an array");
    SubstitutionRule r;
    for (const auto& tj : j["types"]) {
        if (!tj.is_object() || !tj.contains("name") || !tj["name"].is_string()) {
            throw SchemaError("rule: every type needs a string 'name'");
        }
        SubstitutionRule::Type t;
        t.name = tj["name"].get<std::string>();
        if (!tj.contains("children") || !tj["children"].is_array()) throw SchemaError("rule: 'children' must be an array");
        for (const auto& c : tj["children"]) {
            if (!c.is_string()) throw SchemaError("rule: child names must be strings");
            t.children.push_back(c.get<std::string>());
        }
        if (tj.contains("rank")) t.rank = get_count(tj["rank"], "rule rank");
        if (tj.contains("is_cell")) t.is_cell = get_bool(tj["is_cell"], "rule is_cell");
        r.types.push_back(std::move(t));
    }
    if (const auto problem = rule_problem(r); !problem.empty()) throw SchemaError("rule: " + problem);
    return r;
}

Json to_json(const Tower& t) {
    Json j;
    j["schema"] = kTowerSchema;
    if (t.declared_r) j["declared_r"] = *t.declared_r;
    if (t.complement_not_simply_connected) j["complement_not_simply_connected"] = *t.complement_not_simply_connected;
    if (t.rule) j["substitution_rule"] = to_json(*t.rule);
    Json levels = Json::array();
    for (const auto& level : t.levels) {
        Json lj = Json::array();
        for (const auto& c : level) {
            Json cj;
            cj["rank"] = c.rank ? Json(*c.rank) : Json(nullptr);
            cj["is_cell"] = c.is_cell;
            cj["parent"] = c.parent == kNoParent ? Json(nullptr) : Json(c.parent);
            if (!c.mesh_ref.empty()) cj["mesh_ref"] = c.mesh_ref;
            lj.push_back(std::move(cj));
        }
        levels.push_back(std::move(lj));
    }
    j["levels"] = levels;
    return j;
}

Tower tower_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("descriptor: expected an object");
    if (!j.contains("schema") || j["schema"] != kTowerSchema) {
        throw SchemaError(std::string("descriptor: 'schema' must be \"") + kTowerSchema + "\"");
    }
    Tower t;
    if (j.contains("declared_r") && !j["declared_r"].is_null()) t.declared_r = get_count(j["declared_r"], "declared_r");
    if (j.contains("complement_not_simply_connected") && !j["complement_not_simply_connected"].is_null()) {
        t.complement_not_simply_connected = get_bool(j["complement_not_simply_connected"], "complement_not_simply_connected");
    }
    if (j.contains("substitution_rule") && !j["substitution_rule"].is_null()) {
        t.rule = rule_from_json(j["substitution_rule"]);
    }
    if (!j.contains("levels") || !j["levels"].is_array()) throw SchemaError("descriptor: 'levels' must be an array");
    for (const auto& lj : j["levels"]) {
        if (!lj.is_array()) throw SchemaError("descriptor: each level must be an array");
        std::vector<Component> level;
        for (const auto& cj : lj) {
            if (!cj.is_object()) throw SchemaError("descriptor: each component must be an object");
            Component c;
            if (cj.contains("rank") && !cj["rank"].is_null()) c.rank = get_count(cj["rank"], "rank");
            if (cj.contains("is_cell")) c.is_cell = get_bool(cj["is_cell"], "is_cell");
            if (cj.contains("parent") && !cj["parent"].is_null()) c.parent = get_count(cj["parent"], "parent");
            if (cj.contains("mesh_ref")) {
                if (!cj["mesh_ref"].is_string()) throw SchemaError("mesh_ref: expected a string");
                c.mesh_ref = cj["mesh_ref"].get<std::string>();
            }
            level.push_back(std::move(c));
        }
        t.levels.push_back(std::move(level));
    }
    return t;
}

nlohmann::json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw SchemaError("cannot open " + p.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(p.string() + ": " + e.what());
    }
}

void load_meshes(Tower& t, const std::filesystem::path& base) {
    for (auto& level : t.levels) {
        for (auto& c : level) {
            if (c.mesh_ref.empty()) continue;
            const auto path = base / c.mesh_ref;
            try {
                if (path.extension() == ".off") {
                    std::ifstream in(path);
                    if (!in) throw SchemaError("cannot open " + path.string());
                    c.mesh = std::make_shared<const complex::SimplicialComplex3>(complex::read_off(in));
                } else {
                    c.mesh = std::make_shared<const complex::SimplicialComplex3>(
                        complex::from_tets_json(read_json_file(path)));
                }
            } catch (const SchemaError&) {
                throw;
            } catch (const std::exception& e) {
                throw SchemaError(path.string() + ": " + e.what());
            }
        }
    }
}

}  // namespace pmtower::tower
