#include "pmtower/constructions/necklace.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "pmtower/complex/homology.hpp"
#include "pmtower/complex/intersect.hpp"
#include "pmtower/constructions/linking.hpp"
#include "pmtower/parallel.hpp"

namespace pmtower::constructions {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClearanceFactor = 2.2;  // consecutive cores must clear 2 tubes plus 10%

std::string level_name(const char* what, std::size_t k) { return "level_" + std::to_string(k) + "_" + what; }

NecklaceSpec normalized(NecklaceSpec spec) {
    if (spec.scale == 0) spec.scale = default_scale();
    if (spec.budget == 0) spec.budget = kDefaultBudget;
    if (spec.root_spacing == 0) spec.root_spacing = 2 * (spec.base.core_radius + spec.base.minor_radius) + 1;
    if (spec.scale < 0) throw std::invalid_argument("necklace: scale must be positive");
    if (spec.roots == 0) throw std::invalid_argument("necklace: roots must be >= 1");
    if (!spec.base.placements.empty()) throw std::invalid_argument("necklace: base torus must be round");
    if (!(spec.root_spacing > 2 * (spec.base.core_radius + spec.base.minor_radius))) {
        throw std::invalid_argument("necklace: root_spacing too small, root tori would overlap");
    }
    validate(spec.base);
    validate(Placement{0, spec.n, spec.shape, aspect_ratio(spec.base)});
    for (const auto& r : spec.resolutions) {
        if ((r.n_u != 0 && r.n_u < 3) || r.n_v < 3) {
            throw std::invalid_argument("necklace: resolutions must be >= 3 (n_u = 0 for automatic)");
        }
    }
    return spec;
}

}  // namespace

const std::vector<Resolution>& default_resolutions() {
    static const std::vector<Resolution> r{{32, 6}, {0, 6}};
    return r;
}

Resolution resolution_at(const NecklaceSpec& spec, std::size_t level) {
    const auto& list = spec.resolutions.empty() ? default_resolutions() : spec.resolutions;
    return list[std::min(level, list.size() - 1)];
}

geo::Int default_scale() {
    if (const char* env = std::getenv("PMTOWER_SCALE")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<geo::Int>(v);
    }
    return geo::Int{1} << 20;
}

std::size_t estimated_tets(const NecklaceSpec& spec) {
    // Natural slice counts follow the aspect ratio of the previous level.
    long double total = 0, count = static_cast<long double>(std::max<std::size_t>(spec.roots, 1));
    double ratio = spec.base.core_radius / spec.base.minor_radius;
    for (std::size_t k = 0; k <= spec.depth; ++k) {
        const Resolution r = resolution_at(spec, k);
        std::size_t n_u = r.n_u;
        if (k > 0) {
            const Placement p{0, std::max<std::size_t>(spec.n, 3), spec.shape, ratio};
            if (n_u == 0) n_u = natural_slices(p);
            TorusSpec probe;
            probe.placements.push_back(p);
            ratio = aspect_ratio(probe);
        } else if (n_u == 0) {
            n_u = spec.base.n_u;
        }
        total += count * 6.0L * static_cast<long double>(n_u) * static_cast<long double>(r.n_v);
        count *= static_cast<long double>(spec.n);
        if (total > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2)) {
            return std::numeric_limits<std::size_t>::max();
        }
    }
    return static_cast<std::size_t>(total);
}

double design_clearance(const LinkShape& shape, std::size_t n, double host_ratio) {
    constexpr int kSamples = 480;
    const double period = 2 * kPi * host_ratio;
    std::vector<std::vector<geo::Vec3d>> cores(n, std::vector<geo::Vec3d>(kSamples));
    for (std::size_t j = 0; j < n; ++j) {
        const Placement p{j, n, shape, host_ratio};
        for (int i = 0; i < kSamples; ++i) cores[j][static_cast<std::size_t>(i)] = link_core_in_host(p, 2 * kPi * i / kSamples);
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (const auto& p : cores[a]) {
                for (const auto& q : cores[b]) {
                    // The host core is periodic; compare against the nearest copy.
                    double d = std::fmod(std::abs(p.x - q.x), period);
                    d = std::min(d, period - d);
                    const double dy = p.y - q.y, dz = p.z - q.z;
                    best = std::min(best, std::sqrt(d * d + dy * dy + dz * dz));
                }
            }
        }
    }
    return best;
}

std::vector<TorusSpec> antoine_children(const TorusSpec& parent, std::size_t n, const LinkShape& shape,
                                        std::optional<Resolution> res) {
    const double ratio = aspect_ratio(parent);
    validate(Placement{0, n, shape, ratio});
    const double clearance = design_clearance(shape, n, ratio);
    if (!(clearance > kClearanceFactor * shape.tube)) {
        throw std::invalid_argument("link shape: link cores come within " + std::to_string(clearance) +
                                    " host tube radii, need more than " + std::to_string(kClearanceFactor * shape.tube));
    }
    std::vector<TorusSpec> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        TorusSpec child = parent;
        const Placement p{j, n, shape, ratio};
        child.placements.push_back(p);
        child.n_u = res && res->n_u != 0 ? res->n_u : natural_slices(p);
        if (res && res->n_v != 0) child.n_v = res->n_v;
        out.push_back(std::move(child));
    }
    return out;
}

NecklaceTower build_necklace_tower(const NecklaceSpec& spec_in) {
    const NecklaceSpec spec = normalized(spec_in);
    if (const std::size_t est = estimated_tets(spec); est > spec.budget) {
        throw BudgetError("necklace: " + std::to_string(est) + " tetrahedra exceed the budget of " +
                          std::to_string(spec.budget));
    }

    NecklaceTower out;
    std::vector<std::vector<std::size_t>> parents;
    {
        std::vector<TorusSpec> roots;
        const geo::Vec3d u = geo::to_double(spec.base.frame_u).normalized();
        const Resolution r0 = resolution_at(spec, 0);
        for (std::size_t r = 0; r < spec.roots; ++r) {
            TorusSpec t = spec.base;
            t.core_center = t.core_center + u * (spec.root_spacing * static_cast<double>(r));
            if (r0.n_u != 0) t.n_u = r0.n_u;
            if (r0.n_v != 0) t.n_v = r0.n_v;
            roots.push_back(std::move(t));
        }
        out.specs.push_back(std::move(roots));
        parents.emplace_back(spec.roots, tower::kNoParent);
    }
    for (std::size_t k = 1; k <= spec.depth; ++k) {
        std::vector<TorusSpec> level;
        std::vector<std::size_t> par;
        for (std::size_t p = 0; p < out.specs[k - 1].size(); ++p) {
            for (auto& c : antoine_children(out.specs[k - 1][p], spec.n, spec.shape, resolution_at(spec, k))) {
                level.push_back(std::move(c));
                par.push_back(p);
            }
        }
        out.specs.push_back(std::move(level));
        parents.push_back(std::move(par));
    }

    // Mesh and compute homology for every component.
    std::vector<std::vector<complex::SimplicialComplex3>> meshes(out.specs.size());
    std::vector<std::vector<complex::BettiVector>> betti(out.specs.size());
    for (std::size_t k = 0; k < out.specs.size(); ++k) {
        const auto& level = out.specs[k];
        std::vector<std::unique_ptr<complex::SimplicialComplex3>> built(level.size());
        betti[k].resize(level.size());
        parallel_for(level.size(), [&](std::size_t i) {
            built[i] = std::make_unique<complex::SimplicialComplex3>(build_solid_torus(level[i], spec.scale));
            betti[k][i] = complex::betti(*built[i]);
        });
        for (auto& b : built) meshes[k].push_back(std::move(*b));
    }

    Json homology_ev = Json::array();
    bool homology_ok = true;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < betti[k].size(); ++i) {
            const auto& b = betti[k][i];
            total += b.b1;
            if (b != complex::BettiVector{1, 1, 0, 0}) {
                homology_ok = false;
                homology_ev.push_back({{"level", k}, {"component", i}, {"betti", {b.b0, b.b1, b.b2, b.b3}}});
            }
        }
        if (homology_ok) homology_ev.push_back({{"level", k}, {"rank_total", total}});
    }
    if (!homology_ok) throw GeometryError("necklace: a component is not a solid torus", homology_ev);
    out.certificates.push_back({"solid_torus_homology", Status::pass, {{"levels", homology_ev}}});

    for (std::size_t k = 0; k < meshes.size(); ++k) {
        const auto dis = complex::pairwise_disjoint(meshes[k]);
        Json ev = {{"components", meshes[k].size()}};
        if (!dis.disjoint) {
            const auto& w = *dis.witness;
            ev["witness"] = {{"component_a", w.part_a}, {"tet_a", w.tet_a}, {"component_b", w.part_b}, {"tet_b", w.tet_b}};
            throw GeometryError("necklace: components of level " + std::to_string(k) + " intersect", ev);
        }
        out.certificates.push_back({level_name("disjoint", k), Status::pass, ev});
    }

    for (std::size_t k = 1; k < meshes.size(); ++k) {
        std::vector<complex::ContainmentResult> inside(meshes[k].size());
        parallel_for(meshes[k].size(), [&](std::size_t i) {
            inside[i] = complex::strictly_inside(meshes[k][i], meshes[k - 1][parents[k][i]]);
        });
        for (std::size_t i = 0; i < inside.size(); ++i) {
            if (!inside[i].contained) {
                throw GeometryError("necklace: component not inside its parent",
                                    {{"level", k}, {"component", i}, {"parent", parents[k][i]}, {"reason", inside[i].reason}});
            }
        }
        out.certificates.push_back({level_name("strictly_inside_parent", k), Status::pass, {{"components", inside.size()}}});

        Json diam = Json::array();
        for (std::size_t i = 0; i < meshes[k].size(); ++i) {
            const auto child = meshes[k][i].bounding_box().diagonal_sq();
            const auto parent = meshes[k - 1][parents[k][i]].bounding_box().diagonal_sq();
            if (!(child < parent)) {
                throw GeometryError("necklace: component diameter does not decrease",
                                    {{"level", k}, {"component", i}, {"parent", parents[k][i]}});
            }
        }
        double max_child = 0, max_parent = 0;
        for (const auto& m : meshes[k]) max_child = std::max(max_child, std::sqrt(static_cast<double>(m.bounding_box().diagonal_sq())));
        for (const auto& m : meshes[k - 1]) max_parent = std::max(max_parent, std::sqrt(static_cast<double>(m.bounding_box().diagonal_sq())));
        out.certificates.push_back({level_name("diameter_decreases", k), Status::pass,
                                    {{"max_diagonal", max_child / static_cast<double>(spec.scale)},
                                     {"previous_max_diagonal", max_parent / static_cast<double>(spec.scale)}}});

        // Linking matrix of the cores of each sibling group.
        const std::size_t groups = meshes[k - 1].size();
        std::vector<std::vector<std::vector<int>>> matrices(groups);
        parallel_for(groups, [&](std::size_t g) {
            std::vector<PolyCurve> cores;
            for (std::size_t j = 0; j < spec.n; ++j) {
                PolyCurve c{torus_core(out.specs[k][g * spec.n + j], spec.scale)};
                validate_simple(c);
                cores.push_back(std::move(c));
            }
            auto& m = matrices[g];
            m.assign(spec.n, std::vector<int>(spec.n, 0));
            for (std::size_t a = 0; a < spec.n; ++a) {
                for (std::size_t b = a + 1; b < spec.n; ++b) {
                    m[a][b] = m[b][a] = linking_number(cores[a], cores[b]).value;
                }
            }
        });
        Json mats = Json::array();
        for (std::size_t g = 0; g < groups; ++g) {
            for (std::size_t a = 0; a < spec.n; ++a) {
                for (std::size_t b = a + 1; b < spec.n; ++b) {
                    const bool adjacent = b == a + 1 || (a == 0 && b == spec.n - 1);
                    const int v = matrices[g][a][b];
                    if (adjacent ? std::abs(v) != 1 : v != 0) {
                        throw GeometryError("necklace: linking pattern is not a closed chain",
                                            {{"level", k}, {"parent", g}, {"links", {a, b}}, {"linking_number", v}});
                    }
                }
            }
            mats.push_back(matrices[g]);
        }
        out.certificates.push_back({level_name("chain_linking", k), Status::pass, {{"matrices", mats}}});
    }

    auto& t = out.tower;
    t.complement_not_simply_connected = spec.complement_not_simply_connected;
    t.rule = tower::SubstitutionRule::self_similar("necklace", spec.n, 1, false);
    for (std::size_t k = 0; k < meshes.size(); ++k) {
        std::vector<tower::Component> level;
        for (std::size_t i = 0; i < meshes[k].size(); ++i) {
            tower::Component c;
            c.rank = betti[k][i].b1;
            c.parent = parents[k][i];
            c.mesh = std::make_shared<const complex::SimplicialComplex3>(std::move(meshes[k][i]));
            level.push_back(std::move(c));
        }
        t.levels.push_back(std::move(level));
    }
    return out;
}

}  // namespace pmtower::constructions
