#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cmath>

namespace pmtower::geo {

using Int = std::int64_t;
using Wide = __int128;

// Coordinates must satisfy |c| <= kCoordLimit so that every predicate below
// (orientation determinants, separating-axis projections) fits in 128 bits.
inline constexpr Int kCoordLimit = Int{1} << 30;

struct Vec3i {
    Int x = 0, y = 0, z = 0;

    friend constexpr auto operator<=>(const Vec3i&, const Vec3i&) = default;
    constexpr Vec3i operator+(const Vec3i& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3i operator-(const Vec3i& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3i operator*(Int s) const { return {x * s, y * s, z * s}; }
    constexpr Int operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

// Integer vectors whose components may exceed 64 bits (cross products of
// edge vectors).
struct Vec3w {
    Wide x = 0, y = 0, z = 0;
    constexpr bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

constexpr Vec3w widen(const Vec3i& v) { return {v.x, v.y, v.z}; }

constexpr Vec3w cross(const Vec3i& a, const Vec3i& b) {
    return {Wide(a.y) * b.z - Wide(a.z) * b.y, Wide(a.z) * b.x - Wide(a.x) * b.z,
            Wide(a.x) * b.y - Wide(a.y) * b.x};
}

constexpr Wide dot(const Vec3w& a, const Vec3i& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Wide dot(const Vec3i& a, const Vec3i& b) {
    return Wide(a.x) * b.x + Wide(a.y) * b.y + Wide(a.z) * b.z;
}

constexpr int sign(Wide v) { return (v > 0) - (v < 0); }

constexpr bool within_limit(const Vec3i& v) {
    auto ok = [](Int c) { return c <= kCoordLimit && c >= -kCoordLimit; };
    return ok(v.x) && ok(v.y) && ok(v.z);
}

struct Vec3d {
    double x = 0, y = 0, z = 0;

    Vec3d operator+(const Vec3d& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3d operator-(const Vec3d& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3d operator*(double s) const { return {x * s, y * s, z * s}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3d normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

inline double dot(const Vec3d& a, const Vec3d& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3d cross(const Vec3d& a, const Vec3d& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Vec3d to_double(const Vec3i& v) {
    return {static_cast<double>(v.x), static_cast<double>(v.y), static_cast<double>(v.z)};
}

struct Box3i {
    Vec3i lo{kCoordLimit, kCoordLimit, kCoordLimit};
    Vec3i hi{-kCoordLimit, -kCoordLimit, -kCoordLimit};

    void extend(const Vec3i& p);
    bool overlaps(const Box3i& o) const {
        return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y &&
               lo.z <= o.hi.z && o.lo.z <= hi.z;
    }
    bool contains(const Vec3i& p) const {
        return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y && lo.z <= p.z && p.z <= hi.z;
    }
    bool valid() const { return lo.x <= hi.x; }
    // Squared diagonal length, exact.
    Wide diagonal_sq() const;
};

}  // namespace pmtower::geo
