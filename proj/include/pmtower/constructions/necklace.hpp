#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pmtower/constructions/torus.hpp"
#include "pmtower/report.hpp"
#include "pmtower/tower/tower.hpp"

namespace pmtower::constructions {

// n_u = 0 picks natural_slices() for placed links.
struct Resolution {
    std::size_t n_u = 0, n_v = 0;
    friend bool operator==(const Resolution&, const Resolution&) = default;
};

/// Antoine necklace stages N_0 > N_1 > ... > N_depth. Level k holds
/// roots * n^k solid tori.
struct NecklaceSpec {
    std::size_t n = 4;
    std::size_t depth = 2;
    LinkShape shape;
    // Mesh resolution per level; the last entry repeats for deeper levels.
    // Empty means default_resolutions().
    std::vector<Resolution> resolutions;
    TorusSpec base;                 // round root torus, no placements
    std::size_t roots = 1;          // disjoint copies of the base along frame_u
    double root_spacing = 0;        // 0 picks 2 (core + minor) + 1
    geo::Int scale = 0;             // 0 picks default_scale()
    std::size_t budget = 0;         // tetrahedra cap, 0 picks kDefaultBudget
    std::optional<bool> complement_not_simply_connected;

    friend bool operator==(const NecklaceSpec&, const NecklaceSpec&) = default;
};

inline constexpr std::size_t kDefaultBudget = 4'000'000;

const std::vector<Resolution>& default_resolutions();
Resolution resolution_at(const NecklaceSpec& spec, std::size_t level);

// Lattice scale from PMTOWER_SCALE (positive integer), else 2^20.
geo::Int default_scale();

// Total tetrahedra over all levels, saturating at SIZE_MAX.
std::size_t estimated_tets(const NecklaceSpec& spec);

class BudgetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A generated object failed an exact geometric check. `evidence` names the
/// offending components.
class GeometryError : public std::runtime_error {
public:
    GeometryError(const std::string& what, Json ev) : std::runtime_error(what), evidence(std::move(ev)) {}
    Json evidence;
};

// Smallest distance between two link cores of one host, sampled in the
// host's near-isometric coordinates (see link_core_in_host). A shape is
// accepted only when this exceeds 2.2 * tube, a 10% margin over touching.
double design_clearance(const LinkShape& shape, std::size_t n, double host_ratio);

/// n child specs of `parent`, link j centered at angle 2 pi j / n along the
/// parent core, laid out for the parent's aspect_ratio. Throws
/// std::invalid_argument for n < 3 or a shape that fails validation or the
/// design clearance.
std::vector<TorusSpec> antoine_children(const TorusSpec& parent, std::size_t n, const LinkShape& shape = {},
                                        std::optional<Resolution> res = std::nullopt);

struct NecklaceTower {
    tower::Tower tower;                           // meshes attached, ranks from homology
    std::vector<std::vector<TorusSpec>> specs;    // per level, same order as tower.levels
    std::vector<Check> certificates;              // disjointness, containment, linking, diameters, homology
};

/// Builds, meshes and certifies every level. Throws BudgetError before any
/// meshing when estimated_tets exceeds the budget, GeometryError when a
/// certificate fails, std::invalid_argument on a bad spec.
NecklaceTower build_necklace_tower(const NecklaceSpec& spec);

}  // namespace pmtower::constructions
