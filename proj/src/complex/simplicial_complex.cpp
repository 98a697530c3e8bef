#include "pmtower/complex/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "pmtower/geometry/predicates.hpp"

namespace pmtower::complex {

namespace {

template <std::size_t N>
std::array<Index, N> canonical(std::array<Index, N> s, std::size_t n_vertices) {
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < N; ++i) {
        if (s[i] >= n_vertices) {
            throw std::invalid_argument("simplex references vertex " + std::to_string(s[i]) +
                                        " but only " + std::to_string(n_vertices) + " exist");
        }
        if (i > 0 && s[i] == s[i - 1]) {
            throw std::invalid_argument("simplex repeats vertex " + std::to_string(s[i]));
        }
    }
    return s;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
std::size_t find_index(const std::vector<T>& table, const T& key, const char* what) {
    auto it = std::lower_bound(table.begin(), table.end(), key);
    if (it == table.end() || *it != key) throw std::out_of_range(std::string(what) + " not in complex");
    return static_cast<std::size_t>(it - table.begin());
}

}  // namespace

SimplicialComplex3 SimplicialComplex3::create(std::vector<geo::Vec3i> vertices, std::span<const Tet> tets,
                                              std::span<const Triangle> triangles,
                                              std::span<const Edge> edges, geo::Int scale) {
    if (scale <= 0) throw std::invalid_argument("scale must be a positive integer");
    {
        std::vector<geo::Vec3i> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("two vertices share identical coordinates");
        }
    }
    for (const geo::Vec3i& v : vertices) {
        if (!geo::within_limit(v)) throw std::invalid_argument("vertex coordinate exceeds the 2^30 limit");
    }

    SimplicialComplex3 c;
    c.scale_ = scale;
    const std::size_t n = vertices.size();
    c.vertices_ = std::move(vertices);

    c.tets_.reserve(tets.size());
    for (const Tet& t : tets) c.tets_.push_back(canonical(t, n));
    sort_unique(c.tets_);

    for (const Triangle& t : triangles) c.triangles_.push_back(canonical(t, n));
    for (const Tet& t : c.tets_) {
        c.triangles_.push_back({t[1], t[2], t[3]});
        c.triangles_.push_back({t[0], t[2], t[3]});
        c.triangles_.push_back({t[0], t[1], t[3]});
        c.triangles_.push_back({t[0], t[1], t[2]});
    }
    sort_unique(c.triangles_);

    for (const Edge& e : edges) c.edges_.push_back(canonical(e, n));
    for (const Triangle& t : c.triangles_) {
        c.edges_.push_back({t[1], t[2]});
        c.edges_.push_back({t[0], t[2]});
        c.edges_.push_back({t[0], t[1]});
    }
    sort_unique(c.edges_);
    return c;
}

std::size_t SimplicialComplex3::count(int dim) const {
    switch (dim) {
        case 0: return vertices_.size();
        case 1: return edges_.size();
        case 2: return triangles_.size();
        case 3: return tets_.size();
        default: return 0;
    }
}

std::size_t SimplicialComplex3::edge_index(const Edge& e) const { return find_index(edges_, e, "edge"); }

std::size_t SimplicialComplex3::triangle_index(const Triangle& t) const {
    return find_index(triangles_, t, "triangle");
}

std::vector<Triangle> SimplicialComplex3::boundary_triangles() const {
    std::vector<int> cofaces(triangles_.size(), 0);
    std::vector<Index> apex(triangles_.size(), 0);
    for (const Tet& t : tets_) {
        for (int skip = 0; skip < 4; ++skip) {
            Triangle f{};
            int k = 0;
            for (int i = 0; i < 4; ++i) {
                if (i != skip) f[k++] = t[i];
            }
            const std::size_t idx = triangle_index(f);
            ++cofaces[idx];
            apex[idx] = t[skip];
        }
    }
    std::vector<Triangle> out;
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
        if (cofaces[i] > 1) continue;
        Triangle f = triangles_[i];
        if (cofaces[i] == 1) {
            const auto& v = vertices_;
            if (geo::orient3d(v[f[0]], v[f[1]], v[f[2]], v[apex[i]]) > 0) std::swap(f[1], f[2]);
        }
        out.push_back(f);
    }
    return out;
}

std::array<geo::Vec3i, 4> SimplicialComplex3::tet_points(std::size_t t) const {
    const Tet& s = tets_.at(t);
    return {vertices_[s[0]], vertices_[s[1]], vertices_[s[2]], vertices_[s[3]]};
}

geo::Box3i SimplicialComplex3::bounding_box() const {
    geo::Box3i b;
    for (const auto& v : vertices_) b.extend(v);
    return b;
}

SimplicialComplex3 SimplicialComplex3::scaled(geo::Int factor) const {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    SimplicialComplex3 c = *this;
    for (auto& v : c.vertices_) {
        v = v * factor;
        if (!geo::within_limit(v)) throw std::invalid_argument("scaled coordinate exceeds the 2^30 limit");
    }
    c.scale_ = scale_ * factor;
    return c;
}

}  // namespace pmtower::complex
