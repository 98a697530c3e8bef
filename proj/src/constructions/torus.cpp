#include "pmtower/constructions/torus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pmtower::constructions {

namespace {

constexpr double kPi = std::numbers::pi;

// Direction (in the host cross-section) of the plane holding link `index`.
// Even counts alternate between the two disk axes; odd counts rotate by the
// largest angle < pi/2 that closes up after `count` steps (directions are
// taken mod pi).
double axis_angle(std::size_t index, std::size_t count) {
    const double step = (count % 2 == 0) ? kPi / 2 : kPi * static_cast<double>((count - 1) / 2) / count;
    return static_cast<double>(index) * step;
}

struct TubePoint {
    double angle, x, y;
};

// Stadium core point and outward normal, in host coordinates (along the host
// core, across it). The parameter runs over the four pieces with angle
// shares proportional to their slice counts, so uniform angle samples give
// kCapSlices per cap and roughly kStraightSpacing along the straights.
struct CorePoint {
    double along, across, n_along, n_across;
};

CorePoint stadium(double half, double radius, double angle) {
    const double ws = 2 * half / kStraightSpacing;
    const double wc = static_cast<double>(kCapSlices);
    double u = std::fmod(angle, 2 * kPi);
    if (u < 0) u += 2 * kPi;
    u *= (2 * ws + 2 * wc) / (2 * kPi);
    if (u < ws) return {-half + 2 * half * u / ws, -radius, 0, -1};
    u -= ws;
    if (u < wc) {
        const double b = -kPi / 2 + kPi * u / wc;
        return {half + radius * std::cos(b), radius * std::sin(b), std::cos(b), std::sin(b)};
    }
    u -= wc;
    if (u < ws) return {half - 2 * half * u / ws, radius, 0, 1};
    u -= ws;
    const double b = kPi / 2 + kPi * std::min(u, wc) / wc;
    return {-half + radius * std::cos(b), radius * std::sin(b), std::cos(b), std::sin(b)};
}

TubePoint place(const Placement& p, const TubePoint& q) {
    const LinkShape& s = p.shape;
    const CorePoint c = stadium(straight_half_length(p), s.width, q.angle);
    const double along = c.along + s.tube * q.x * c.n_along;
    const double across = c.across + s.tube * q.x * c.n_across;
    const double perp = s.tube * q.y;
    const double phi = axis_angle(p.index, p.count);
    const double center = 2 * kPi * static_cast<double>(p.index) / static_cast<double>(p.count);
    return {center + along / p.host_ratio, across * std::cos(phi) - perp * std::sin(phi),
            across * std::sin(phi) + perp * std::cos(phi)};
}

}  // namespace

double straight_half_length(const Placement& p) {
    return kPi * p.host_ratio / static_cast<double>(p.count);
}

std::size_t natural_slices(const Placement& p) {
    const double ws = std::ceil(2 * straight_half_length(p) / kStraightSpacing);
    return 2 * static_cast<std::size_t>(ws) + 2 * kCapSlices;
}

geo::Vec3d link_core_in_host(const Placement& p, double angle) {
    const CorePoint c = stadium(straight_half_length(p), p.shape.width, angle);
    const double phi = axis_angle(p.index, p.count);
    const double center = 2 * kPi * static_cast<double>(p.index) / static_cast<double>(p.count);
    return {center * p.host_ratio + c.along, c.across * std::cos(phi), c.across * std::sin(phi)};
}

double aspect_ratio(const TorusSpec& spec) {
    if (spec.placements.empty()) return spec.core_radius / spec.minor_radius;
    const Placement& p = spec.placements.back();
    const double perimeter = 4 * straight_half_length(p) + 2 * kPi * p.shape.width;
    return perimeter / (2 * kPi * p.shape.tube);
}

void validate(const Placement& p) {
    const LinkShape& s = p.shape;
    if (p.count < 3) throw std::invalid_argument("a necklace needs at least 3 links");
    if (p.index >= p.count) throw std::invalid_argument("placement index out of range");
    if (!(s.width > 0) || !(s.tube > 0) || !(p.host_ratio > 0)) {
        throw std::invalid_argument("link shape parameters must be positive");
    }
    if (!(s.tube < s.width)) throw std::invalid_argument("link tube must be thinner than its cap radius");
    if (!(s.width + s.tube < 1.0)) throw std::invalid_argument("link does not fit in the host cross-section");
    // Links j and j+2 are separated along the host core by sector - 2 width.
    const double sector = 2 * kPi * p.host_ratio / static_cast<double>(p.count);
    if (p.count > 3 && !(sector - 2 * s.width > 2 * s.tube)) {
        throw std::invalid_argument("host too short for this many links: non-adjacent links would meet");
    }
}

void validate(const TorusSpec& spec) {
    if (!(spec.minor_radius > 0) || !(spec.minor_radius < spec.core_radius)) {
        throw std::invalid_argument("torus needs 0 < minor_radius < core_radius");
    }
    if (spec.frame_u == geo::Vec3i{} || spec.frame_v == geo::Vec3i{}) {
        throw std::invalid_argument("torus frame vectors must be nonzero");
    }
    if (geo::dot(spec.frame_u, spec.frame_v) != 0) {
        throw std::invalid_argument("torus frame vectors must be orthogonal");
    }
    if (spec.n_u < 3 || spec.n_v < 3) throw std::invalid_argument("torus resolutions must be >= 3");
    for (const Placement& p : spec.placements) validate(p);
}

geo::Vec3d torus_point(const TorusSpec& spec, double angle, double x, double y) {
    TubePoint q{angle, x, y};
    for (auto it = spec.placements.rbegin(); it != spec.placements.rend(); ++it) q = place(*it, q);
    const geo::Vec3d u = geo::to_double(spec.frame_u).normalized();
    const geo::Vec3d v = geo::to_double(spec.frame_v).normalized();
    const geo::Vec3d n = geo::cross(u, v);
    const double radial = spec.core_radius + spec.minor_radius * q.x;
    return spec.core_center + (u * std::cos(q.angle) + v * std::sin(q.angle)) * radial +
           n * (spec.minor_radius * q.y);
}

geo::Vec3i to_lattice(const geo::Vec3d& p, geo::Int scale) {
    const double s = static_cast<double>(scale);
    const double lim = static_cast<double>(geo::kCoordLimit);
    auto conv = [&](double c) {
        const double v = std::round(c * s);
        if (!(std::abs(v) <= lim)) throw std::invalid_argument("coordinate overflow at the declared scale");
        return static_cast<geo::Int>(v);
    };
    return {conv(p.x), conv(p.y), conv(p.z)};
}

complex::SimplicialComplex3 build_solid_torus(const TorusSpec& spec, geo::Int scale) {
    validate(spec);
    const std::size_t nu = spec.n_u, nv = spec.n_v;
    const std::size_t ring = 2 * nv;
    const std::size_t per_slice = 1 + ring;
    std::vector<geo::Vec3i> verts;
    verts.reserve(nu * per_slice);
    for (std::size_t i = 0; i < nu; ++i) {
        const double angle = 2 * kPi * static_cast<double>(i) / static_cast<double>(nu);
        verts.push_back(to_lattice(torus_point(spec, angle, 0, 0), scale));
        for (std::size_t m = 0; m < ring; ++m) {
            const double t = kPi * static_cast<double>(m) / static_cast<double>(nv);
            verts.push_back(to_lattice(torus_point(spec, angle, std::cos(t), std::sin(t)), scale));
        }
    }
    auto vid = [&](std::size_t slice, std::size_t local) {
        return static_cast<complex::Index>((slice % nu) * per_slice + local);
    };
    // Kuhn subdivision: one tetrahedron per ordering of the three local axes.
    static constexpr int kOrders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<complex::Tet> tets;
    tets.reserve(6 * nu * nv);
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t k = 0; k < nv; ++k) {
            // quad corner (a, b) -> local vertex id in the slice
            const std::size_t corner[2][2] = {{0, 1 + (2 * k + 2) % ring}, {1 + 2 * k, 1 + 2 * k + 1}};
            auto at = [&](const int c[3]) { return vid(i + static_cast<std::size_t>(c[2]), corner[c[0]][c[1]]); };
            for (const auto& order : kOrders) {
                int c[3] = {0, 0, 0};
                complex::Tet t{};
                t[0] = at(c);
                for (int step = 0; step < 3; ++step) {
                    c[order[step]] = 1;
                    t[static_cast<std::size_t>(step) + 1] = at(c);
                }
                tets.push_back(t);
            }
        }
    }
    try {
        return complex::SimplicialComplex3::create(std::move(verts), tets, {}, {}, scale);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("torus mesh: ") + e.what() + " (resolution too fine for scale?)");
    }
}

std::vector<geo::Vec3i> torus_core(const TorusSpec& spec, geo::Int scale) {
    validate(spec);
    std::vector<geo::Vec3i> out;
    for (std::size_t i = 0; i < spec.n_u; ++i) {
        const double angle = 2 * kPi * static_cast<double>(i) / static_cast<double>(spec.n_u);
        out.push_back(to_lattice(torus_point(spec, angle, 0, 0), scale));
    }
    return out;
}

}  // namespace pmtower::constructions
