#include "pmtower/constructions/spec_io.hpp"

#include <set>
#include <string>

namespace pmtower::constructions {

namespace {

using nlohmann::json;

void allow_keys(const json& j, const char* where, std::initializer_list<const char*> keys) {
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : j.items()) {
        if (!ok.count(k)) throw SpecError(std::string(where) + ": unknown key '" + k + "'");
    }
}

std::size_t count(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned()) throw SpecError("'" + key + "' must be an integer");
    if (v.is_number_integer() && v.get<long long>() < 0) throw SpecError("'" + key + "' must be nonnegative");
    return v.get<std::size_t>();
}

double number(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (!v.is_number()) throw SpecError("'" + key + "' must be a number");
    return v.get<double>();
}

geo::Vec3d point(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number()) {
        throw SpecError(std::string(what) + " must be [x, y, z]");
    }
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

geo::Vec3i ipoint(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number_integer() || !v[1].is_number_integer() ||
        !v[2].is_number_integer()) {
        throw SpecError(std::string(what) + " must be an integer triple");
    }
    return {v[0].get<geo::Int>(), v[1].get<geo::Int>(), v[2].get<geo::Int>()};
}

geo::Int scale_of(const json& j) {
    if (!j.contains("scale")) return 0;
    const std::size_t s = count(j, "scale");
    if (s == 0) throw SpecError("'scale' must be positive");
    return static_cast<geo::Int>(s);
}

NecklaceSpec necklace_from(const json& j) {
    allow_keys(j, "necklace spec",
               {"schema", "kind", "geometry", "declared_r", "n", "depth", "shape", "resolutions", "base", "roots",
                "root_spacing", "scale", "budget", "complement_not_simply_connected"});
    NecklaceSpec s;
    s.n = count(j, "n");
    s.depth = count(j, "depth");
    if (j.contains("shape")) {
        const json& sh = j["shape"];
        if (!sh.is_object()) throw SpecError("'shape' must be an object");
        allow_keys(sh, "shape", {"width", "tube"});
        if (sh.contains("width")) s.shape.width = number(sh, "width");
        if (sh.contains("tube")) s.shape.tube = number(sh, "tube");
    }
    if (j.contains("resolutions")) {
        if (!j["resolutions"].is_array()) throw SpecError("'resolutions' must be an array");
        for (const json& r : j["resolutions"]) {
            if (!r.is_object()) throw SpecError("resolution entries must be objects");
            allow_keys(r, "resolution", {"n_u", "n_v"});
            s.resolutions.push_back({count(r, "n_u"), count(r, "n_v")});
        }
    }
    if (j.contains("base")) {
        const json& b = j["base"];
        if (!b.is_object()) throw SpecError("'base' must be an object");
        allow_keys(b, "base", {"core_center", "frame_u", "frame_v", "core_radius", "minor_radius"});
        if (b.contains("core_center")) s.base.core_center = point(b["core_center"], "core_center");
        if (b.contains("frame_u")) s.base.frame_u = ipoint(b["frame_u"], "frame_u");
        if (b.contains("frame_v")) s.base.frame_v = ipoint(b["frame_v"], "frame_v");
        if (b.contains("core_radius")) s.base.core_radius = number(b, "core_radius");
        if (b.contains("minor_radius")) s.base.minor_radius = number(b, "minor_radius");
    }
    if (j.contains("roots")) s.roots = count(j, "roots");
    if (j.contains("root_spacing")) s.root_spacing = number(j, "root_spacing");
    s.scale = scale_of(j);
    if (j.contains("budget")) s.budget = count(j, "budget");
    if (j.contains("complement_not_simply_connected")) {
        if (!j["complement_not_simply_connected"].is_boolean()) {
            throw SpecError("'complement_not_simply_connected' must be a boolean");
        }
        s.complement_not_simply_connected = j["complement_not_simply_connected"].get<bool>();
    }
    return s;
}

CellSpec cells_from(const json& j) {
    allow_keys(j, "cells spec", {"schema", "kind", "geometry", "declared_r", "points", "depth", "scale"});
    CellSpec s;
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty()) {
        throw SpecError("'points' must be a nonempty array");
    }
    for (const json& p : j["points"]) s.points.push_back(point(p, "point"));
    s.depth = count(j, "depth");
    s.scale = scale_of(j);
    return s;
}

Json vec(const geo::Vec3d& v) { return Json::array({v.x, v.y, v.z}); }
Json vec(const geo::Vec3i& v) { return Json::array({v.x, v.y, v.z}); }

}  // namespace

GenerateSpec spec_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw SpecError("spec must be a JSON object");
        if (!j.contains("schema") || j["schema"] != kSpecSchema) {
            throw SpecError(std::string("'schema' must be \"") + kSpecSchema + "\"");
        }
        if (!j.contains("kind") || !j["kind"].is_string()) throw SpecError("'kind' must be a string");
        GenerateSpec out;
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "necklace") {
            out.object = necklace_from(j);
        } else if (kind == "cells") {
            out.object = cells_from(j);
        } else {
            throw SpecError("unknown kind '" + kind + "'");
        }
        if (j.contains("geometry")) {
            if (!j["geometry"].is_boolean()) throw SpecError("'geometry' must be a boolean");
            out.geometry = j["geometry"].get<bool>();
        }
        if (j.contains("declared_r")) out.declared_r = count(j, "declared_r");
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("spec: ") + e.what());
    }
}

Json to_json(const GenerateSpec& s) {
    Json j;
    j["schema"] = kSpecSchema;
    if (const auto* n = std::get_if<NecklaceSpec>(&s.object)) {
        j["kind"] = "necklace";
        j["n"] = n->n;
        j["depth"] = n->depth;
        j["shape"] = {{"width", n->shape.width}, {"tube", n->shape.tube}};
        Json res = Json::array();
        for (const auto& r : n->resolutions) res.push_back({{"n_u", r.n_u}, {"n_v", r.n_v}});
        if (!res.empty()) j["resolutions"] = res;
        j["base"] = {{"core_center", vec(n->base.core_center)},
                     {"frame_u", vec(n->base.frame_u)},
                     {"frame_v", vec(n->base.frame_v)},
                     {"core_radius", n->base.core_radius},
                     {"minor_radius", n->base.minor_radius}};
        j["roots"] = n->roots;
        if (n->root_spacing != 0) j["root_spacing"] = n->root_spacing;
        if (n->scale != 0) j["scale"] = n->scale;
        if (n->budget != 0) j["budget"] = n->budget;
        if (n->complement_not_simply_connected) {
            j["complement_not_simply_connected"] = *n->complement_not_simply_connected;
        }
    } else {
        const auto& c = std::get<CellSpec>(s.object);
        j["kind"] = "cells";
        Json pts = Json::array();
        for (const auto& p : c.points) pts.push_back(vec(p));
        j["points"] = pts;
        j["depth"] = c.depth;
        if (c.scale != 0) j["scale"] = c.scale;
    }
    j["geometry"] = s.geometry;
    if (s.declared_r) j["declared_r"] = *s.declared_r;
    return j;
}

}  // namespace pmtower::constructions
