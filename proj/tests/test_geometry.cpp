#include <doctest.h>

#include <random>
#include <vector>

#include "oracles/geometry_oracle.hpp"
#include "pmtower/geometry/predicates.hpp"

using namespace pmtower::geo;

namespace {

const std::array<Vec3i, 4> kUnit{Vec3i{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}};

std::array<Vec3i, 4> translated(const std::array<Vec3i, 4>& t, const Vec3i& d) {
    return {t[0] + d, t[1] + d, t[2] + d, t[3] + d};
}

bool sat(const std::array<Vec3i, 4>& a, const std::array<Vec3i, 4>& b) {
    return simplices_intersect(std::span<const Vec3i>(a), std::span<const Vec3i>(b));
}

}  // namespace

TEST_CASE("orient3d") {
    CHECK(orient3d({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
    CHECK(orient3d({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, -1}) == -1);
    CHECK(orient3d({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 7, 0}) == 0);
    // Near the coordinate limit the determinant needs more than 64 bits.
    const Int L = kCoordLimit;
    CHECK(orient3d({-L, -L, -L}, {L, -L, -L}, {-L, L, -L}, {L, L, -L + 1}) == 1);
    CHECK(orient3d({-L, -L, -L}, {L, -L, -L}, {-L, L, -L}, {L, L, -L}) == 0);
}

TEST_CASE("point_in_tet is closed") {
    CHECK(point_in_tet({1, 1, 1}, kUnit) == 1);
    CHECK(point_in_tet({0, 0, 0}, kUnit) == 0);
    CHECK(point_in_tet({2, 2, 0}, kUnit) == 0);
    CHECK(point_in_tet({2, 2, 1}, kUnit) == -1);
    CHECK(point_in_tet({-1, 0, 0}, kUnit) == -1);
}

TEST_CASE("segments_intersect") {
    CHECK(segments_intersect({0, 0, 0}, {2, 2, 0}, {0, 2, 0}, {2, 0, 0}));
    CHECK_FALSE(segments_intersect({0, 0, 0}, {2, 2, 0}, {0, 2, 1}, {2, 0, 1}));
    CHECK(segments_intersect({0, 0, 0}, {2, 0, 0}, {2, 0, 0}, {5, 5, 5}));   // shared endpoint
    CHECK(segments_intersect({0, 0, 0}, {4, 0, 0}, {2, 0, 0}, {6, 0, 0}));   // collinear overlap
    CHECK_FALSE(segments_intersect({0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {6, 0, 0}));
}

TEST_CASE("simplices_intersect on hand-picked tetrahedra") {
    CHECK(sat(kUnit, kUnit));
    CHECK(sat(kUnit, translated(kUnit, {4, 0, 0})));       // shared vertex
    CHECK(sat(kUnit, translated(kUnit, {2, 2, 0})));       // vertex on a face
    CHECK_FALSE(sat(kUnit, translated(kUnit, {2, 2, 1})));
    CHECK_FALSE(sat(kUnit, translated(kUnit, {10, 0, 0})));
    // Edge against triangle, no vertex inside the other.
    const std::array<Vec3i, 2> seg{Vec3i{1, 1, -5}, {1, 1, 5}};
    CHECK(simplices_intersect(seg, std::span<const Vec3i>(kUnit)));
    const std::array<Vec3i, 3> tri{Vec3i{-5, -5, 1}, {9, 0, 1}, {0, 9, 1}};
    CHECK(simplices_intersect(std::span<const Vec3i>(tri), std::span<const Vec3i>(kUnit)));
}

TEST_CASE("simplices_intersect agrees with the feature-enumeration oracle") {
    // A small grid makes touching and coplanar configurations common.
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<Int> c(0, 4);
    auto random_tet = [&] {
        for (;;) {
            std::array<Vec3i, 4> t;
            for (auto& v : t) v = {c(rng), c(rng), c(rng)};
            if (orient3d(t[0], t[1], t[2], t[3]) != 0) return t;
        }
    };
    int hits = 0, misses = 0;
    for (int i = 0; i < 20000; ++i) {
        const auto a = random_tet();
        const auto b = random_tet();
        const bool expected = oracle::tets_intersect(a, b);
        (expected ? hits : misses)++;
        REQUIRE(sat(a, b) == expected);
        REQUIRE(sat(b, a) == expected);
    }
    CHECK(hits > 1000);
    CHECK(misses > 1000);
}

TEST_CASE("simplices_intersect is translation invariant at large coordinates") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> c(-3, 3);
    const Vec3i shift{kCoordLimit - 10, -(kCoordLimit - 10), kCoordLimit / 3};
    for (int i = 0; i < 2000; ++i) {
        std::array<Vec3i, 4> a, b;
        for (auto& v : a) v = {c(rng), c(rng), c(rng)};
        for (auto& v : b) v = {c(rng), c(rng), c(rng)};
        if (orient3d(a[0], a[1], a[2], a[3]) == 0 || orient3d(b[0], b[1], b[2], b[3]) == 0) continue;
        REQUIRE(sat(a, b) == sat(translated(a, shift), translated(b, shift)));
    }
}
