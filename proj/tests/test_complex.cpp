#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "oracles/complex_oracle.hpp"
#include "pmtower/complex/homology.hpp"
#include "pmtower/complex/intersect.hpp"
#include "pmtower/complex/mesh_io.hpp"
#include "pmtower/constructions/torus.hpp"

using namespace pmtower;
using namespace pmtower::complex;

namespace {

SimplicialComplex3 solid_tet(geo::Vec3i shift = {}) {
    std::vector<geo::Vec3i> v{geo::Vec3i{0, 0, 0} + shift, geo::Vec3i{1, 0, 0} + shift,
                              geo::Vec3i{0, 1, 0} + shift, geo::Vec3i{0, 0, 1} + shift};
    const std::vector<Tet> t{{0, 1, 2, 3}};
    return SimplicialComplex3::create(std::move(v), t);
}

SimplicialComplex3 hollow_tet() {
    std::vector<geo::Vec3i> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const std::vector<Triangle> f{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return SimplicialComplex3::create(std::move(v), {}, f);
}

SimplicialComplex3 torus(double cx, std::size_t nu = 8, std::size_t nv = 4) {
    constructions::TorusSpec s;
    s.core_center = {cx, 0, 0};
    s.n_u = nu;
    s.n_v = nv;
    return constructions::build_solid_torus(s, 1 << 12);
}

}  // namespace

TEST_CASE("boundary matrices of single simplices") {
    const auto t = solid_tet();
    const auto d3 = boundary_matrix(t, 3);
    CHECK(d3.rows() == 4);
    CHECK(d3.cols() == 1);
    CHECK(d3.count_ones() == 4);

    std::vector<geo::Vec3i> v{{0, 0, 0}, {1, 0, 0}};
    const std::vector<Edge> e{{0, 1}};
    const auto seg = SimplicialComplex3::create(std::move(v), {}, {}, e);
    const auto d1 = boundary_matrix(seg, 1);
    CHECK(d1.rows() == 2);
    CHECK(d1.cols() == 1);
    CHECK(d1.count_ones() == 2);

    CHECK_THROWS_AS(boundary_matrix(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(boundary_matrix(t, 4), std::invalid_argument);
}

TEST_CASE("betti numbers and euler characteristic of basic complexes") {
    CHECK(betti(solid_tet()) == BettiVector{1, 0, 0, 0});
    CHECK(euler_characteristic(solid_tet()) == 1);
    CHECK(betti(hollow_tet()) == BettiVector{1, 0, 1, 0});
    CHECK(euler_characteristic(hollow_tet()) == 2);
    CHECK(betti(SimplicialComplex3()) == BettiVector{});
    const auto t = torus(0);
    CHECK(betti(t) == BettiVector{1, 1, 0, 0});
    CHECK(euler_characteristic(t) == 0);
}

TEST_CASE("create closes under faces and canonicalises") {
    std::vector<geo::Vec3i> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const std::vector<Tet> t{{3, 1, 0, 2}};
    const auto c = SimplicialComplex3::create(std::move(v), t);
    CHECK(c.count(0) == 4);
    CHECK(c.count(1) == 6);
    CHECK(c.count(2) == 4);
    CHECK(c.count(3) == 1);
    CHECK(c.tets().front() == Tet{0, 1, 2, 3});
    CHECK(c.boundary_triangles().size() == 4);
}

TEST_CASE("create rejects malformed input") {
    using V = std::vector<geo::Vec3i>;
    const std::vector<Tet> repeated{{0, 1, 1, 2}};
    CHECK_THROWS_AS(SimplicialComplex3::create(V{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, repeated), std::invalid_argument);
    const std::vector<Tet> out_of_range{{0, 1, 2, 7}};
    CHECK_THROWS_AS(SimplicialComplex3::create(V{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, out_of_range),
                    std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex3::create(V{{0, 0, 0}, {0, 0, 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex3::create(V{{geo::kCoordLimit + 1, 0, 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex3::create(V{{0, 0, 0}}, {}, {}, {}, 0), std::invalid_argument);
}

TEST_CASE("boundary of boundary vanishes and Betti numbers match the reference on random complexes") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto c = oracle::random_complex(rng);
        for (int d = 2; d <= 3; ++d) {
            if (c.count(d) == 0) continue;
            CHECK(multiply(boundary_matrix(c, d - 1), boundary_matrix(c, d)).count_ones() == 0);
        }
        const auto b = betti(c);
        CHECK(b == oracle::reference_betti(c));
        CHECK(b.euler() == euler_characteristic(c));
    }
}

TEST_CASE("solid torus Betti numbers match the reference at small resolution") {
    const auto t = torus(0, 3, 3);
    CHECK(t.count(3) == 54);
    CHECK(oracle::reference_betti(t) == BettiVector{1, 1, 0, 0});
    CHECK(multiply(boundary_matrix(t, 2), boundary_matrix(t, 3)).count_ones() == 0);
    CHECK(multiply(boundary_matrix(t, 1), boundary_matrix(t, 2)).count_ones() == 0);
}

TEST_CASE("homology is invariant under scaling and translation") {
    const auto t = torus(0);
    CHECK(betti(t.scaled(2)) == betti(t));
    CHECK(t.scaled(2).scale() == 2 * t.scale());
    CHECK(betti(torus(17.5)) == betti(t));
}

TEST_CASE("vertex components") {
    std::vector<SimplicialComplex3> parts{solid_tet(), solid_tet({5, 0, 0}), solid_tet({0, 9, 0})};
    const auto u = disjoint_union(parts);
    std::size_t k = 0;
    const auto comp = vertex_components(u, &k);
    CHECK(k == 3);
    CHECK(comp.front() == 0);
    CHECK(betti(u) == BettiVector{3, 0, 0, 0});
}

TEST_CASE("disjointness and unions") {
    const auto a = torus(0), b = torus(20);
    CHECK(disjoint(a, b).disjoint);
    const auto self = disjoint(a, a);
    CHECK_FALSE(self.disjoint);
    REQUIRE(self.witness.has_value());
    CHECK(self.witness->part_b == 1);

    std::vector<SimplicialComplex3> two{a, b};
    const auto u = disjoint_union(two);
    CHECK(betti(u) == BettiVector{2, 2, 0, 0});
    CHECK(euler_characteristic(u) == 0);

    CHECK(betti(disjoint_union(std::span<const SimplicialComplex3>{})) == BettiVector{});

    std::vector<SimplicialComplex3> clash{a, torus(1)};
    CHECK_THROWS_AS(disjoint_union(clash), OverlapError);

    CHECK(disjoint(solid_tet(), solid_tet({10, 0, 0})).disjoint);
}

TEST_CASE("strict containment") {
    // A small tet well inside a large one, then one sharing its boundary.
    std::vector<geo::Vec3i> big{{0, 0, 0}, {40, 0, 0}, {0, 40, 0}, {0, 0, 40}};
    const std::vector<Tet> t{{0, 1, 2, 3}};
    const auto outer = SimplicialComplex3::create(std::move(big), t);
    CHECK(strictly_inside(solid_tet({2, 2, 2}), outer).contained);
    const auto touching = strictly_inside(solid_tet(), outer);
    CHECK_FALSE(touching.contained);
    CHECK_FALSE(touching.reason.empty());
    CHECK_FALSE(strictly_inside(solid_tet({50, 0, 0}), outer).contained);
}

TEST_CASE("OFF and tets JSON round trips") {
    const auto t = torus(0, 5, 3);
    std::stringstream off;
    write_off(off, t);
    const auto surface = read_off(off);
    CHECK(surface.scale() == t.scale());
    CHECK(surface.count(2) == t.boundary_triangles().size());
    CHECK(betti(surface) == BettiVector{1, 2, 1, 0});

    const auto j = to_tets_json(t);
    CHECK(j["format"] == kTetsFormat);
    const auto back = from_tets_json(nlohmann::json::parse(j.dump()));
    CHECK(back.vertices() == t.vertices());
    CHECK(back.tets() == t.tets());
    CHECK(back.scale() == t.scale());

    std::istringstream bad("OFF\n3 1 0\n0 0 0\n1 0 0\n");
    CHECK_THROWS_AS(read_off(bad), std::invalid_argument);
    CHECK_THROWS(from_tets_json(nlohmann::json{{"format", "other"}}));
}
