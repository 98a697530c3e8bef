#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pmtower/complex/homology.hpp"
#include "pmtower/complex/intersect.hpp"
#include "pmtower/constructions/cells.hpp"
#include "pmtower/constructions/linking.hpp"
#include "pmtower/constructions/necklace.hpp"
#include "pmtower/constructions/plane_split.hpp"
#include "pmtower/constructions/spec_io.hpp"
#include "pmtower/constructions/torus.hpp"

using namespace pmtower;
using namespace pmtower::constructions;
using complex::BettiVector;

namespace {

constexpr geo::Int kScale = 1 << 16;

PolyCurve circle(geo::Vec3d center, geo::Vec3d u, geo::Vec3d v, double radius, int n = 24) {
    PolyCurve c;
    for (int i = 0; i < n; ++i) {
        const double a = 2 * std::numbers::pi * i / n;
        c.points.push_back(to_lattice(center + u * (radius * std::cos(a)) + v * (radius * std::sin(a)), kScale));
    }
    return c;
}

bool has_certificate(const NecklaceTower& nt, const std::string& name) {
    for (const auto& c : nt.certificates) {
        if (c.name == name) return c.status == Status::pass;
    }
    return false;
}

}  // namespace

TEST_CASE("solid torus meshes") {
    for (std::size_t nu = 3; nu <= 8; ++nu) {
        for (std::size_t nv = 3; nv <= 8; ++nv) {
            TorusSpec s;
            s.n_u = nu;
            s.n_v = nv;
            const auto t = build_solid_torus(s, kScale);
            CHECK(t.count(3) == torus_tet_count(s));
            CHECK(complex::betti(t) == BettiVector{1, 1, 0, 0});
            CHECK(complex::euler_characteristic(t) == 0);
        }
    }
    TorusSpec s;
    s.n_u = 3;
    s.n_v = 3;
    CHECK(build_solid_torus(s, kScale).count(3) == 54);
    CHECK(torus_core(s, kScale).size() == 3);

    // Doubling the lattice doubles every coordinate; homology is unchanged.
    const auto a = build_solid_torus(s, kScale), b = build_solid_torus(s, 2 * kScale);
    CHECK(b.vertices().front().x == 2 * a.vertices().front().x);
    CHECK(complex::betti(b) == complex::betti(a));
}

TEST_CASE("solid torus validation") {
    TorusSpec s;
    s.n_u = 2;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = {};
    s.minor_radius = 3.5;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = {};
    s.frame_v = {1, 1, 0};
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = {};
    CHECK_THROWS(build_solid_torus(s, geo::kCoordLimit));  // overflow
    CHECK_THROWS(build_solid_torus(s, 1));                 // rounding merges vertices

    Placement p{0, 4, {}, 3.0};
    CHECK_NOTHROW(validate(p));
    p.count = 2;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {4, 4, {}, 3.0};
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {0, 4, {0.3, 0.4}, 3.0};
    CHECK_THROWS_AS(validate(p), std::invalid_argument);  // tube >= width
}

TEST_CASE("linking numbers") {
    const geo::Vec3d x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    const auto a = circle({0, 0, 0}, x, y, 1);
    const auto hopf = circle({1, 0, 0}, x, z, 1);
    CHECK(std::abs(linking_number(a, hopf).value) == 1);
    CHECK(linking_number(a, hopf).value == linking_number(hopf, a).value);
    CHECK(linking_number(a, circle({10, 0, 0}, x, z, 1)).value == 0);
    CHECK(linking_number(a, circle({10, 0, 0}, x, y, 1)).value == 0);

    // Reversing one curve flips the sign.
    auto rev = hopf;
    std::reverse(rev.points.begin(), rev.points.end());
    CHECK(linking_number(a, rev).value == -linking_number(a, hopf).value);

    // Translation invariance.
    const auto a2 = circle({5, 5, 5}, x, y, 1);
    const auto h2 = circle({6, 5, 5}, x, z, 1);
    CHECK(linking_number(a2, h2).value == linking_number(a, hopf).value);

    CHECK_THROWS_AS(linking_number(a, circle({1, 0, 0}, x, y, 1)), std::invalid_argument);
    CHECK_THROWS_AS(validate_simple(PolyCurve{{{0, 0, 0}, {1, 0, 0}}}), std::invalid_argument);
    CHECK(curves_intersect(a, a));
}

TEST_CASE("antoine children form a closed chain inside the parent") {
    const TorusSpec base;
    const auto kids = antoine_children(base, 4);
    REQUIRE(kids.size() == 4);
    std::vector<PolyCurve> cores;
    std::vector<complex::SimplicialComplex3> meshes;
    for (const auto& k : kids) {
        cores.push_back({torus_core(k, kScale)});
        meshes.push_back(build_solid_torus(k, kScale));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(linking_number(cores[i], cores[(i + 1) % 4]).value) == 1);
    }
    CHECK(linking_number(cores[0], cores[2]).value == 0);
    CHECK(linking_number(cores[1], cores[3]).value == 0);
    CHECK(complex::pairwise_disjoint(meshes).disjoint);
    const auto parent = build_solid_torus(base, kScale);
    for (const auto& m : meshes) CHECK(complex::strictly_inside(m, parent).contained);

    CHECK_THROWS_AS(antoine_children(base, 2), std::invalid_argument);
    CHECK_THROWS_AS(antoine_children(base, 4, LinkShape{0.9, 0.5}), std::invalid_argument);
    CHECK(design_clearance({}, 4, aspect_ratio(base)) > 2.2 * LinkShape{}.tube);
}

TEST_CASE("necklace towers") {
    NecklaceSpec s;
    s.scale = kScale;
    s.depth = 0;
    auto nt = build_necklace_tower(s);
    CHECK(nt.tower.level_ranks() == std::vector<std::size_t>{1});

    s.depth = 1;
    nt = build_necklace_tower(s);
    CHECK(nt.tower.level_ranks() == std::vector<std::size_t>{1, 4});
    std::vector<complex::SimplicialComplex3> level1;
    for (const auto& c : nt.tower.levels[1]) {
        CHECK(c.parent == 0);
        level1.push_back(*c.mesh);
    }
    CHECK(complex::betti(complex::disjoint_union(level1)) == BettiVector{4, 4, 0, 0});
    CHECK(has_certificate(nt, "solid_torus_homology"));
    CHECK(has_certificate(nt, "level_1_disjoint"));
    CHECK(has_certificate(nt, "level_1_strictly_inside_parent"));
    CHECK(has_certificate(nt, "level_1_diameter_decreases"));
    CHECK(has_certificate(nt, "level_1_chain_linking"));
    REQUIRE(nt.tower.rule.has_value());
    CHECK(nt.tower.rule->types.front().children.size() == 4);

    for (std::size_t n : {3, 5}) {
        s.n = n;
        CHECK(build_necklace_tower(s).tower.level_ranks() == std::vector<std::size_t>{1, n});
    }
}

TEST_CASE("necklace spec errors") {
    NecklaceSpec s;
    s.scale = kScale;
    s.depth = 3;
    s.budget = 1000;
    CHECK_THROWS_AS(build_necklace_tower(s), BudgetError);
    s = {};
    s.n = 2;
    CHECK_THROWS_AS(build_necklace_tower(s), std::invalid_argument);
    s = {};
    s.roots = 2;
    s.root_spacing = 5;
    CHECK_THROWS_AS(build_necklace_tower(s), std::invalid_argument);
    s = {};
    s.resolutions = {{2, 6}};
    CHECK_THROWS_AS(build_necklace_tower(s), std::invalid_argument);

    NecklaceSpec a, b;
    b.depth = 3;
    CHECK(estimated_tets(b) > estimated_tets(a));
    CHECK(resolution_at(a, 0) == default_resolutions().front());
    CHECK(resolution_at(a, 7) == default_resolutions().back());
}

TEST_CASE("cell towers") {
    const std::vector<geo::Vec3d> pts{{0, 0, 0}, {1, 1, 0}, {2, 2, 0}};
    const auto t = build_cell_tower(pts, 2, kScale);
    REQUIRE(t.depth() == 3);
    CHECK(t.levels[0].size() == 1);
    CHECK(t.levels[2].size() == 3);
    for (const auto& level : t.levels) {
        for (const auto& c : level) {
            CHECK(c.is_cell);
            CHECK(c.rank == std::size_t{0});
            CHECK(complex::betti(*c.mesh) == BettiVector{1, 0, 0, 0});
        }
    }
    std::vector<complex::SimplicialComplex3> deepest;
    for (const auto& c : t.levels[2]) deepest.push_back(*c.mesh);
    CHECK(complex::pairwise_disjoint(deepest).disjoint);
    for (const auto& c : t.levels[2]) {
        CHECK(complex::strictly_inside(*c.mesh, *t.levels[1][c.parent].mesh).contained);
    }

    const auto single = build_cell_tower({{1, 2, 3}}, 3, kScale);
    CHECK(single.depth() == 4);
    for (const auto& level : single.levels) CHECK(level.size() == 1);

    CHECK_THROWS_AS(build_cell_tower({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, 1, kScale), std::invalid_argument);
    CHECK_THROWS_AS(build_cell_tower({{0, 0, 0}, {0, 0, 0}}, 1, kScale), std::invalid_argument);
    CHECK_THROWS_AS(build_cell_tower({}, 1, kScale), std::invalid_argument);
    CHECK_THROWS_AS(build_cell_tower({{0, 0, 0}, {1e-4, 0, 0}}, 10, kScale), std::invalid_argument);
}

TEST_CASE("plane split") {
    NecklaceSpec s;
    s.scale = kScale;
    s.depth = 1;
    s.roots = 2;
    const auto t = build_necklace_tower(s).tower;
    CHECK(t.level_ranks() == std::vector<std::size_t>{2, 8});

    const auto mid = AxisPlane::at(0, 4.5, kScale);
    const auto halves = plane_split(t, mid);
    CHECK(halves.below.level_ranks() == std::vector<std::size_t>{1, 4});
    CHECK(halves.above.level_ranks() == std::vector<std::size_t>{1, 4});
    CHECK_FALSE(halves.below.declared_r.has_value());
    CHECK_FALSE(halves.below.rule.has_value());

    const auto left = plane_split(t, AxisPlane::at(0, -100, kScale));
    CHECK(left.below.component_count() == 0);
    CHECK(left.above.level_ranks() == t.level_ranks());

    try {
        plane_split(t, AxisPlane::at(0, 0, kScale));
        FAIL("expected a straddling component");
    } catch (const StraddleError& e) {
        CHECK(e.level == 0);
        CHECK(e.component == 0);
    }

    // Cell towers straddle at level 0 but split cleanly from level 1.
    const auto cells = build_cell_tower({{0, 0, 0}, {4, 0, 0}}, 2, kScale);
    CHECK_THROWS_AS(plane_split(cells, AxisPlane::at(0, 2, kScale)), StraddleError);
    const auto split = plane_split(cells, AxisPlane::at(0, 2, kScale), 1);
    CHECK(split.below.depth() == 2);
    CHECK(split.above.depth() == 2);
    CHECK(split.below.levels[0].size() == 1);
    CHECK_THROWS_AS(plane_split(cells, AxisPlane{3, 0}), std::invalid_argument);
}

TEST_CASE("generator spec parsing") {
    using nlohmann::json;
    const auto g = spec_from_json(json::parse(R"({"schema":"pmtower.spec/1","kind":"necklace","n":4,"depth":2,
        "shape":{"width":0.6,"tube":0.22},"resolutions":[{"n_u":32,"n_v":6},{"n_u":0,"n_v":6}],
        "complement_not_simply_connected":true,"declared_r":1})"));
    REQUIRE(std::holds_alternative<NecklaceSpec>(g.object));
    const auto& ns = std::get<NecklaceSpec>(g.object);
    CHECK(ns.n == 4);
    CHECK(ns.resolutions.size() == 2);
    CHECK(ns.complement_not_simply_connected == true);
    CHECK(g.declared_r == std::size_t{1});
    CHECK(g.geometry);
    CHECK(to_json(spec_from_json(json::parse(to_json(g).dump()))).dump() == to_json(g).dump());

    const auto c = spec_from_json(json::parse(
        R"({"schema":"pmtower.spec/1","kind":"cells","points":[[0,0,0],[1,0,0]],"depth":2,"geometry":false})"));
    REQUIRE(std::holds_alternative<CellSpec>(c.object));
    CHECK(std::get<CellSpec>(c.object).points.size() == 2);
    CHECK_FALSE(c.geometry);

    for (const char* bad : {
             R"([1,2])",
             R"({"schema":"pmtower.spec/2","kind":"necklace","n":4,"depth":1})",
             R"({"schema":"pmtower.spec/1","kind":"sponge","n":4,"depth":1})",
             R"({"schema":"pmtower.spec/1","kind":"necklace","n":4,"depth":1,"colour":"red"})",
             R"({"schema":"pmtower.spec/1","kind":"necklace","n":-4,"depth":1})",
             R"({"schema":"pmtower.spec/1","kind":"necklace","n":4})",
             R"({"schema":"pmtower.spec/1","kind":"necklace","n":4,"depth":1,"shape":[0.6]})",
             R"({"schema":"pmtower.spec/1","kind":"cells","points":[],"depth":1})",
             R"({"schema":"pmtower.spec/1","kind":"cells","points":[[0,0]],"depth":1})",
             R"({"schema":"pmtower.spec/1","kind":"necklace","n":4,"depth":1,"geometry":"yes"})",
         }) {
        CAPTURE(bad);
        CHECK_THROWS_AS(spec_from_json(json::parse(bad)), SpecError);
    }
}
