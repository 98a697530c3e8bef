#include "pmtower/complex/mesh_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pmtower::complex {

void write_off(std::ostream& os, const SimplicialComplex3& c) {
    const std::vector<Triangle> skin = c.boundary_triangles();
    os << "OFF\n# pmtower scale=" << c.scale() << "\n";
    os << c.vertices().size() << ' ' << skin.size() << " 0\n";
    for (const auto& v : c.vertices()) os << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (const auto& f : skin) os << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

SimplicialComplex3 read_off(std::istream& is) {
    geo::Int scale = 1;
    std::vector<std::string> tokens;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            const std::string comment = line.substr(hash);
            if (const auto at = comment.find("scale="); at != std::string::npos) {
                scale = std::stoll(comment.substr(at + 6));
            }
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (!header) {
                if (tok != "OFF") throw std::invalid_argument("OFF: missing header");
                header = true;
                continue;
            }
            tokens.push_back(tok);
        }
    }
    if (!header) throw std::invalid_argument("OFF: missing header");
    std::size_t pos = 0;
    auto next_int = [&]() -> long long {
        if (pos >= tokens.size()) throw std::invalid_argument("OFF: truncated file");
        std::size_t used = 0;
        const long long v = std::stoll(tokens[pos], &used);
        if (used != tokens[pos].size()) throw std::invalid_argument("OFF: expected integer, got " + tokens[pos]);
        ++pos;
        return v;
    };
    const long long nv = next_int(), nf = next_int();
    next_int();
    if (nv < 0 || nf < 0) throw std::invalid_argument("OFF: negative counts");
    std::vector<geo::Vec3i> verts;
    for (long long i = 0; i < nv; ++i) {
        const geo::Int x = next_int(), y = next_int(), z = next_int();
        verts.push_back({x, y, z});
    }
    std::vector<Triangle> tris;
    for (long long f = 0; f < nf; ++f) {
        const long long k = next_int();
        if (k < 3) throw std::invalid_argument("OFF: face with fewer than 3 corners");
        std::vector<Index> idx;
        for (long long i = 0; i < k; ++i) {
            const long long v = next_int();
            if (v < 0 || v >= nv) throw std::invalid_argument("OFF: face index out of range");
            idx.push_back(static_cast<Index>(v));
        }
        for (std::size_t i = 1; i + 1 < idx.size(); ++i) tris.push_back({idx[0], idx[i], idx[i + 1]});
    }
    if (nf > 0) {
        // Interior vertices of a tetrahedral mesh are written but no face uses them.
        std::vector<Index> remap(verts.size(), 0);
        std::vector<bool> used(verts.size(), false);
        for (const auto& t : tris) {
            for (Index v : t) used[v] = true;
        }
        std::vector<geo::Vec3i> kept;
        for (std::size_t v = 0; v < verts.size(); ++v) {
            if (used[v]) {
                remap[v] = static_cast<Index>(kept.size());
                kept.push_back(verts[v]);
            }
        }
        for (auto& t : tris) {
            for (Index& v : t) v = remap[v];
        }
        verts = std::move(kept);
    }
    return SimplicialComplex3::create(std::move(verts), {}, tris, {}, scale);
}

nlohmann::ordered_json to_tets_json(const SimplicialComplex3& c) {
    nlohmann::ordered_json j;
    j["format"] = kTetsFormat;
    j["scale"] = c.scale();
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : c.vertices()) verts.push_back({v.x, v.y, v.z});
    auto& tets = j["tets"] = nlohmann::ordered_json::array();
    std::set<Triangle> tet_faces;
    for (const Tet& t : c.tets()) {
        tets.push_back({t[0], t[1], t[2], t[3]});
        tet_faces.insert({t[1], t[2], t[3]});
        tet_faces.insert({t[0], t[2], t[3]});
        tet_faces.insert({t[0], t[1], t[3]});
        tet_faces.insert({t[0], t[1], t[2]});
    }
    auto& tris = j["triangles"] = nlohmann::ordered_json::array();
    std::set<Edge> covered;
    for (const Triangle& t : c.triangles()) {
        covered.insert({t[1], t[2]});
        covered.insert({t[0], t[2]});
        covered.insert({t[0], t[1]});
        if (!tet_faces.count(t)) tris.push_back({t[0], t[1], t[2]});
    }
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : c.edges()) {
        if (!covered.count(e)) edges.push_back({e[0], e[1]});
    }
    return j;
}

SimplicialComplex3 from_tets_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw std::invalid_argument("tets JSON: expected an object");
        if (j.value("format", std::string{}) != kTetsFormat) {
            throw std::invalid_argument(std::string("tets JSON: format must be ") + kTetsFormat);
        }
        const geo::Int scale = j.at("scale").get<geo::Int>();
        std::vector<geo::Vec3i> verts;
        for (const auto& v : j.at("vertices")) {
            if (v.size() != 3) throw std::invalid_argument("tets JSON: vertex needs 3 coordinates");
            verts.push_back({v[0].get<geo::Int>(), v[1].get<geo::Int>(), v[2].get<geo::Int>()});
        }
        std::vector<Tet> tets;
        for (const auto& t : j.at("tets")) tets.push_back(t.get<Tet>());
        std::vector<Triangle> tris;
        if (j.contains("triangles")) {
            for (const auto& t : j["triangles"]) tris.push_back(t.get<Triangle>());
        }
        std::vector<Edge> edges;
        if (j.contains("edges")) {
            for (const auto& e : j["edges"]) edges.push_back(e.get<Edge>());
        }
        return SimplicialComplex3::create(std::move(verts), tets, tris, edges, scale);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("tets JSON: ") + e.what());
    }
}

}  // namespace pmtower::complex
