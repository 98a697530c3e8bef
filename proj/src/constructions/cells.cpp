#include "pmtower/constructions/cells.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pmtower/complex/homology.hpp"
#include "pmtower/constructions/necklace.hpp"

namespace pmtower::constructions {

namespace {

using geo::Int;
using geo::Vec3i;

Int gcd3(const Vec3i& v) { return std::gcd(std::gcd(std::abs(v.x), std::abs(v.y)), std::abs(v.z)); }

Vec3i narrow(const geo::Vec3w& w) {
    auto c = [](geo::Wide x) {
        if (x > geo::kCoordLimit || x < -geo::kCoordLimit) throw std::invalid_argument("cell tower: coordinate overflow");
        return static_cast<Int>(x);
    };
    return {c(w.x), c(w.y), c(w.z)};
}

Vec3i primitive(Vec3i v) {
    const Int g = gcd3(v);
    return {v.x / g, v.y / g, v.z / g};
}

struct Frame {
    Vec3i origin, d, u1, u2;
};

// Box {origin + d t + u1 a + u2 b : t in [t0, t1], |a|, |b| <= w}.
complex::SimplicialComplex3 make_box(const Frame& f, Int t0, Int t1, Int w, Int scale) {
    std::vector<Vec3i> verts;
    for (int i = 0; i < 8; ++i) {
        const Int t = (i & 1) ? t1 : t0;
        const Int a = (i & 2) ? w : -w;
        const Int b = (i & 4) ? w : -w;
        auto coord = [&](Int o, Int d, Int u1, Int u2) {
            return geo::Wide(o) + geo::Wide(d) * t + geo::Wide(u1) * a + geo::Wide(u2) * b;
        };
        verts.push_back(narrow({coord(f.origin.x, f.d.x, f.u1.x, f.u2.x), coord(f.origin.y, f.d.y, f.u1.y, f.u2.y),
                                coord(f.origin.z, f.d.z, f.u1.z, f.u2.z)}));
    }
    static constexpr int kOrders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<complex::Tet> tets;
    for (const auto& order : kOrders) {
        int c = 0;
        complex::Tet t{};
        t[0] = 0;
        for (int s = 0; s < 3; ++s) {
            c |= 1 << order[s];
            t[static_cast<std::size_t>(s) + 1] = static_cast<complex::Index>(c);
        }
        tets.push_back(t);
    }
    return complex::SimplicialComplex3::create(std::move(verts), tets, {}, {}, scale);
}

}  // namespace

tower::Tower build_cell_tower(const std::vector<geo::Vec3d>& points, std::size_t depth, geo::Int scale) {
    if (scale == 0) scale = default_scale();
    if (scale < 0) throw std::invalid_argument("cell tower: scale must be positive");
    if (points.empty()) throw std::invalid_argument("cell tower: no points");
    if (depth > 24) throw std::invalid_argument("cell tower: depth too large");
    std::vector<Vec3i> lattice;
    for (const auto& p : points) lattice.push_back(to_lattice(p, scale));

    Frame f;
    f.origin = lattice[0];
    f.d = {1, 0, 0};
    for (const auto& p : lattice) {
        if (p != lattice[0]) {
            f.d = primitive(p - lattice[0]);
            break;
        }
    }
    // Lattice parameter of each point along d; exact because d is primitive.
    std::vector<Int> t;
    for (const auto& p : lattice) {
        const Vec3i off = p - f.origin;
        if (!geo::cross(off, f.d).is_zero()) throw std::invalid_argument("cell tower: points are not collinear");
        const Int comp = f.d.x != 0 ? off.x / f.d.x : (f.d.y != 0 ? off.y / f.d.y : off.z / f.d.z);
        t.push_back(comp);
    }
    std::vector<Int> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("cell tower: points are not pairwise distinct at the declared scale");
    }
    Int gap = Int{1} << 24;
    for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::min(gap, sorted[i] - sorted[i - 1]);
    if (gap < (Int{1} << (depth + 2))) {
        throw std::invalid_argument("cell tower: points too close for this depth at the declared scale");
    }

    // Perpendicular axes: d x e for the coordinate axis e least aligned with d.
    const Int ax = std::abs(f.d.x), ay = std::abs(f.d.y), az = std::abs(f.d.z);
    const Vec3i e = (ax <= ay && ax <= az) ? Vec3i{1, 0, 0} : (ay <= az ? Vec3i{0, 1, 0} : Vec3i{0, 0, 1});
    f.u1 = primitive(narrow(geo::cross(f.d, e)));
    f.u2 = primitive(narrow(geo::cross(f.d, f.u1)));

    struct Group {
        std::size_t first, last;  // into `sorted`
        std::size_t parent;
    };
    tower::Tower out;
    std::vector<Group> groups{{0, sorted.size() - 1, tower::kNoParent}};
    for (std::size_t k = 0; k <= depth; ++k) {
        const Int margin = gap >> (k + 2);
        std::vector<tower::Component> level;
        std::vector<Group> next;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const Group& grp = groups[g];
            auto mesh = std::make_shared<const complex::SimplicialComplex3>(
                make_box(f, sorted[grp.first] - margin, sorted[grp.last] + margin, margin, scale));
            const auto b = complex::betti(*mesh);
            tower::Component c;
            c.rank = b.b1;
            c.is_cell = b == complex::BettiVector{1, 0, 0, 0};
            c.parent = grp.parent;
            c.mesh = std::move(mesh);
            level.push_back(std::move(c));
            if (grp.first == grp.last) {
                next.push_back({grp.first, grp.last, g});
            } else {
                const std::size_t mid = grp.first + (grp.last - grp.first + 1 + 1) / 2;
                next.push_back({grp.first, mid - 1, g});
                next.push_back({mid, grp.last, g});
            }
        }
        out.levels.push_back(std::move(level));
        groups = std::move(next);
    }
    return out;
}

}  // namespace pmtower::constructions
