#include "pmtower/complex/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pmtower/geometry/predicates.hpp"

namespace pmtower::complex {

namespace {

struct Item {
    geo::Box3i box;
    std::size_t index;
};

std::vector<Item> tet_items(const SimplicialComplex3& c) {
    std::vector<Item> items;
    items.reserve(c.tets().size());
    for (std::size_t t = 0; t < c.tets().size(); ++t) {
        geo::Box3i b;
        for (const auto& p : c.tet_points(t)) b.extend(p);
        items.push_back({b, t});
    }
    return items;
}

// Calls visit(a_index, b_index) for every pair whose boxes overlap, in a
// deterministic order; stops when visit returns true. Sweep along x with an
// active list per side.
template <typename Visit>
bool sweep_pairs(std::vector<Item> a, std::vector<Item> b, Visit&& visit) {
    auto by_lo = [](const Item& x, const Item& y) {
        return x.box.lo.x != y.box.lo.x ? x.box.lo.x < y.box.lo.x : x.index < y.index;
    };
    std::sort(a.begin(), a.end(), by_lo);
    std::sort(b.begin(), b.end(), by_lo);
    std::vector<const Item*> live_a, live_b;
    auto expire = [](std::vector<const Item*>& live, geo::Int x) {
        std::erase_if(live, [x](const Item* it) { return it->box.hi.x < x; });
    };
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        const bool take_a = j == b.size() || (i < a.size() && a[i].box.lo.x <= b[j].box.lo.x);
        if (take_a) {
            const Item& x = a[i++];
            expire(live_b, x.box.lo.x);
            for (const Item* y : live_b) {
                if (x.box.overlaps(y->box) && visit(x.index, y->index)) return true;
            }
            live_a.push_back(&x);
        } else {
            const Item& y = b[j++];
            expire(live_a, y.box.lo.x);
            for (const Item* x : live_a) {
                if (x->box.overlaps(y.box) && visit(x->index, y.index)) return true;
            }
            live_b.push_back(&y);
        }
    }
    return false;
}

}  // namespace

DisjointnessResult disjoint(const SimplicialComplex3& a, const SimplicialComplex3& b) {
    DisjointnessResult result;
    if (a.tets().empty() || b.tets().empty()) return result;
    if (!a.bounding_box().overlaps(b.bounding_box())) return result;
    std::vector<Item> ia, ib;
    const geo::Box3i box_a = a.bounding_box(), box_b = b.bounding_box();
    for (const Item& it : tet_items(a)) {
        if (it.box.overlaps(box_b)) ia.push_back(it);
    }
    for (const Item& it : tet_items(b)) {
        if (it.box.overlaps(box_a)) ib.push_back(it);
    }
    sweep_pairs(std::move(ia), std::move(ib), [&](std::size_t ta, std::size_t tb) {
        const auto pa = a.tet_points(ta);
        const auto pb = b.tet_points(tb);
        if (geo::simplices_intersect(pa, pb)) {
            result.disjoint = false;
            result.witness = OverlapWitness{0, ta, 1, tb};
            return true;
        }
        return false;
    });
    return result;
}

DisjointnessResult pairwise_disjoint(std::span<const SimplicialComplex3> parts) {
    std::vector<geo::Box3i> boxes;
    for (const auto& p : parts) boxes.push_back(p.bounding_box());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (!boxes[i].valid() || !boxes[j].valid() || !boxes[i].overlaps(boxes[j])) continue;
            DisjointnessResult r = disjoint(parts[i], parts[j]);
            if (!r.disjoint) {
                r.witness->part_a = i;
                r.witness->part_b = j;
                return r;
            }
        }
    }
    return {};
}

SimplicialComplex3 disjoint_union(std::span<const SimplicialComplex3> parts) {
    if (parts.empty()) return SimplicialComplex3::create({}, {}, {}, {}, 1);
    const geo::Int scale = parts.front().scale();
    for (const auto& p : parts) {
        if (p.scale() != scale) throw std::invalid_argument("disjoint_union: parts use different scales");
    }
    const DisjointnessResult check = pairwise_disjoint(parts);
    if (!check.disjoint) {
        const OverlapWitness& w = *check.witness;
        std::ostringstream msg;
        msg << "disjoint_union: part " << w.part_a << " tet " << w.tet_a << " meets part " << w.part_b
            << " tet " << w.tet_b;
        throw OverlapError(w, msg.str());
    }
    std::vector<geo::Vec3i> vertices;
    std::vector<Tet> tets;
    std::vector<Triangle> tris;
    std::vector<Edge> edges;
    for (const auto& p : parts) {
        const auto offset = static_cast<Index>(vertices.size());
        vertices.insert(vertices.end(), p.vertices().begin(), p.vertices().end());
        for (Tet t : p.tets()) {
            for (auto& v : t) v += offset;
            tets.push_back(t);
        }
        for (Triangle t : p.triangles()) {
            for (auto& v : t) v += offset;
            tris.push_back(t);
        }
        for (Edge e : p.edges()) {
            for (auto& v : e) v += offset;
            edges.push_back(e);
        }
    }
    return SimplicialComplex3::create(std::move(vertices), tets, tris, edges, scale);
}

namespace {

// Uniform grid over tetrahedron bounding boxes for point location.
class TetGrid {
public:
    explicit TetGrid(const SimplicialComplex3& c) : c_(c), box_(c.bounding_box()) {
        const std::size_t n = c.tets().size();
        k_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::cbrt(static_cast<double>(n))));
        cells_.resize(k_ * k_ * k_);
        for (std::size_t t = 0; t < n; ++t) {
            geo::Box3i b;
            for (const auto& p : c.tet_points(t)) b.extend(p);
            const auto lo = cell(b.lo), hi = cell(b.hi);
            for (std::size_t x = lo[0]; x <= hi[0]; ++x) {
                for (std::size_t y = lo[1]; y <= hi[1]; ++y) {
                    for (std::size_t z = lo[2]; z <= hi[2]; ++z) cells_[(x * k_ + y) * k_ + z].push_back(t);
                }
            }
        }
    }

    // Some tet contains p (closed), found via the grid.
    bool locate(const geo::Vec3i& p) const {
        if (!box_.contains(p)) return false;
        const auto ci = cell(p);
        for (std::size_t t : cells_[(ci[0] * k_ + ci[1]) * k_ + ci[2]]) {
            if (geo::point_in_tet(p, c_.tet_points(t)) >= 0) return true;
        }
        return false;
    }

private:
    std::array<std::size_t, 3> cell(const geo::Vec3i& p) const {
        std::array<std::size_t, 3> out{};
        for (int a = 0; a < 3; ++a) {
            const geo::Wide extent = geo::Wide(box_.hi[a]) - box_.lo[a] + 1;
            const geo::Wide off = geo::Wide(p[a]) - box_.lo[a];
            geo::Wide idx = off * static_cast<geo::Wide>(k_) / extent;
            idx = std::clamp<geo::Wide>(idx, 0, static_cast<geo::Wide>(k_ - 1));
            out[static_cast<std::size_t>(a)] = static_cast<std::size_t>(idx);
        }
        return out;
    }

    const SimplicialComplex3& c_;
    geo::Box3i box_;
    std::size_t k_ = 1;
    std::vector<std::vector<std::size_t>> cells_;
};

}  // namespace

ContainmentResult strictly_inside(const SimplicialComplex3& inner, const SimplicialComplex3& outer) {
    if (outer.tets().empty()) return {false, "outer complex has no tetrahedra"};
    const TetGrid grid(outer);
    for (std::size_t v = 0; v < inner.vertices().size(); ++v) {
        if (!grid.locate(inner.vertices()[v])) {
            return {false, "vertex " + std::to_string(v) + " lies outside the outer mesh"};
        }
    }
    const std::vector<Triangle> skin = outer.boundary_triangles();
    std::vector<Item> tri_items;
    const geo::Box3i inner_box = inner.bounding_box();
    for (std::size_t i = 0; i < skin.size(); ++i) {
        geo::Box3i b;
        for (Index v : skin[i]) b.extend(outer.vertices()[v]);
        if (b.overlaps(inner_box)) tri_items.push_back({b, i});
    }
    std::string reason;
    sweep_pairs(tet_items(inner), std::move(tri_items), [&](std::size_t t, std::size_t f) {
        const auto tp = inner.tet_points(t);
        const std::array<geo::Vec3i, 3> fp{outer.vertices()[skin[f][0]], outer.vertices()[skin[f][1]],
                                           outer.vertices()[skin[f][2]]};
        if (geo::simplices_intersect(fp, tp)) {
            reason = "tet " + std::to_string(t) + " meets outer boundary triangle " + std::to_string(f);
            return true;
        }
        return false;
    });
    if (!reason.empty()) return {false, reason};
    return {};
}

}  // namespace pmtower::complex
