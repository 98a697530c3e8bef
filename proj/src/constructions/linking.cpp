#include "pmtower/constructions/linking.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "pmtower/geometry/predicates.hpp"

namespace pmtower::constructions {

namespace {

std::size_t segment_count(const PolyCurve& c) { return c.points.size(); }
const geo::Vec3i& seg_start(const PolyCurve& c, std::size_t i) { return c.points[i]; }
const geo::Vec3i& seg_end(const PolyCurve& c, std::size_t i) { return c.points[(i + 1) % c.points.size()]; }

bool collinear(const geo::Vec3i& a, const geo::Vec3i& b, const geo::Vec3i& c) {
    return geo::cross(b - a, c - a).is_zero();
}

}  // namespace

void validate_simple(const PolyCurve& c) {
    const std::size_t n = c.points.size();
    if (n < 3) throw std::invalid_argument("curve needs at least 3 points");
    for (std::size_t i = 0; i < n; ++i) {
        if (seg_start(c, i) == seg_end(c, i)) throw std::invalid_argument("curve repeats a point consecutively");
    }
    for (std::size_t i = 0; i < n; ++i) {
        // Adjacent segments share one endpoint; they must not fold back.
        const geo::Vec3i& a = seg_start(c, i);
        const geo::Vec3i& b = seg_end(c, i);
        const geo::Vec3i& d = seg_end(c, (i + 1) % n);
        if (collinear(a, b, d) && geo::dot(a - b, d - b) > 0) {
            throw std::invalid_argument("curve folds back on itself");
        }
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (geo::segments_intersect(a, b, seg_start(c, j), seg_end(c, j))) {
                throw std::invalid_argument("curve is not simple");
            }
        }
    }
}

bool curves_intersect(const PolyCurve& a, const PolyCurve& b) {
    for (std::size_t i = 0; i < segment_count(a); ++i) {
        geo::Box3i ba;
        ba.extend(seg_start(a, i));
        ba.extend(seg_end(a, i));
        for (std::size_t j = 0; j < segment_count(b); ++j) {
            geo::Box3i bb;
            bb.extend(seg_start(b, j));
            bb.extend(seg_end(b, j));
            if (!ba.overlaps(bb)) continue;
            if (geo::segments_intersect(seg_start(a, i), seg_end(a, i), seg_start(b, j), seg_end(b, j))) return true;
        }
    }
    return false;
}

const std::vector<geo::Vec3i>& projection_directions() {
    static const std::vector<geo::Vec3i> dirs = [] {
        std::vector<geo::Vec3i> out;
        constexpr geo::Int R = 4;
        for (geo::Int x = -R; x <= R; ++x) {
            for (geo::Int y = -R; y <= R; ++y) {
                for (geo::Int z = -R; z <= R; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (std::gcd(std::gcd(x, y), z) != 1) continue;
                    // one representative per line
                    const geo::Vec3i v{x, y, z};
                    const geo::Int first = x != 0 ? x : (y != 0 ? y : z);
                    if (first < 0) continue;
                    out.push_back(v);
                }
            }
        }
        // Skew directions first: axis-aligned views are the most likely to be
        // degenerate for lattice-generated curves.
        std::stable_sort(out.begin(), out.end(), [](const geo::Vec3i& a, const geo::Vec3i& b) {
            auto zeros = [](const geo::Vec3i& v) { return (v.x == 0) + (v.y == 0) + (v.z == 0); };
            if (zeros(a) != zeros(b)) return zeros(a) < zeros(b);
            return geo::dot(a, a) < geo::dot(b, b);
        });
        return out;
    }();
    return dirs;
}

namespace {

struct P2 {
    geo::Int u, v;
};

geo::Wide cross2(const P2& a, const P2& b) { return geo::Wide(a.u) * b.v - geo::Wide(a.v) * b.u; }
P2 sub(const P2& a, const P2& b) { return {a.u - b.u, a.v - b.v}; }

struct Projection {
    geo::Vec3i dir, e1, e2;
    P2 operator()(const geo::Vec3i& p) const {
        return {static_cast<geo::Int>(geo::dot(p, e1)), static_cast<geo::Int>(geo::dot(p, e2))};
    }
};

Projection make_projection(const geo::Vec3i& d) {
    const geo::Int ax = std::abs(d.x), ay = std::abs(d.y), az = std::abs(d.z);
    geo::Vec3i axis{0, 0, 0};
    if (ax <= ay && ax <= az) {
        axis.x = 1;
    } else if (ay <= az) {
        axis.y = 1;
    } else {
        axis.z = 1;
    }
    auto to_i = [](const geo::Vec3w& w) {
        return geo::Vec3i{static_cast<geo::Int>(w.x), static_cast<geo::Int>(w.y), static_cast<geo::Int>(w.z)};
    };
    const geo::Vec3i e1 = to_i(geo::cross(d, axis));
    const geo::Vec3i e2 = to_i(geo::cross(d, e1));
    return {d, e1, e2};
}

// Signed crossings in one projection; nullopt when the projection is not
// generic. Returns {sum where a is over, sum where b is over}.
std::optional<std::pair<int, int>> crossings(const PolyCurve& a, const PolyCurve& b, const Projection& proj) {
    const geo::Vec3i& v = proj.dir;
    for (const PolyCurve* c : {&a, &b}) {
        for (std::size_t i = 0; i < segment_count(*c); ++i) {
            if (geo::cross(seg_end(*c, i) - seg_start(*c, i), v).is_zero()) return std::nullopt;
        }
    }
    int a_over = 0, b_over = 0;
    for (std::size_t i = 0; i < segment_count(a); ++i) {
        const geo::Vec3i& A0 = seg_start(a, i);
        const geo::Vec3i& A1 = seg_end(a, i);
        const P2 p0 = proj(A0), p1 = proj(A1);
        for (std::size_t j = 0; j < segment_count(b); ++j) {
            const geo::Vec3i& B0 = seg_start(b, j);
            const geo::Vec3i& B1 = seg_end(b, j);
            const P2 q0 = proj(B0), q1 = proj(B1);
            if (std::max(p0.u, p1.u) < std::min(q0.u, q1.u) || std::max(q0.u, q1.u) < std::min(p0.u, p1.u) ||
                std::max(p0.v, p1.v) < std::min(q0.v, q1.v) || std::max(q0.v, q1.v) < std::min(p0.v, p1.v)) {
                continue;
            }
            const P2 dp = sub(p1, p0), dq = sub(q1, q0);
            const int o1 = geo::sign(cross2(dq, sub(p0, q0)));
            const int o2 = geo::sign(cross2(dq, sub(p1, q0)));
            const int o3 = geo::sign(cross2(dp, sub(q0, p0)));
            const int o4 = geo::sign(cross2(dp, sub(q1, p0)));
            const bool transverse = o1 * o2 < 0 && o3 * o4 < 0;
            if (!transverse) {
                // Touching or collinear contact makes the view non-generic;
                // clearly separated segments are simply skipped.
                const bool apart = (o1 == o2 && o1 != 0) || (o3 == o4 && o3 != 0);
                if (apart) continue;
                return std::nullopt;
            }
            const geo::Wide denom = cross2(dp, dq);
            const geo::Wide s_num = cross2(sub(q0, p0), dq);
            const geo::Wide t_num = cross2(sub(q0, p0), dp);
            const geo::Wide ha = geo::dot(A0, v) * denom + s_num * geo::dot(A1 - A0, v);
            const geo::Wide hb = geo::dot(B0, v) * denom + t_num * geo::dot(B1 - B0, v);
            if (ha == hb) throw std::invalid_argument("linking_number: curves intersect");
            const bool a_is_over = denom > 0 ? ha > hb : ha < hb;
            const geo::Vec3i d_over = a_is_over ? A1 - A0 : B1 - B0;
            const geo::Vec3i d_under = a_is_over ? B1 - B0 : A1 - A0;
            const int s = geo::sign(geo::dot(geo::cross(d_over, d_under), v));
            if (a_is_over) {
                a_over += s;
            } else {
                b_over += s;
            }
        }
    }
    return std::make_pair(a_over, b_over);
}

}  // namespace

LinkingResult linking_number(const PolyCurve& a, const PolyCurve& b) {
    validate_simple(a);
    validate_simple(b);
    if (curves_intersect(a, b)) throw std::invalid_argument("linking_number: curves intersect");
    for (const geo::Vec3i& d : projection_directions()) {
        const auto sums = crossings(a, b, make_projection(d));
        if (!sums) continue;
        if (sums->first != sums->second) {
            throw std::logic_error("linking_number: over/under crossing sums disagree");
        }
        return {sums->first, d};
    }
    throw std::runtime_error("linking_number: no generic projection direction found");
}

}  // namespace pmtower::constructions
