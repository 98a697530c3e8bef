#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pmtower/complex/homology.hpp"
#include "pmtower/constructions/plane_split.hpp"
#include "pmtower/report.hpp"
#include "pmtower/tower/tower.hpp"

namespace pmtower::analysis {

struct Discrepancy {
    std::size_t level = 0, component = 0;
    std::optional<std::size_t> declared;  // prior rank annotation
    complex::BettiVector computed;
    bool cell_flag_contradicted = false;  // is_cell set but the mesh is not a cell
};

struct AnnotationReport {
    std::vector<Discrepancy> discrepancies;
    Check check;
};

/// Copy of `t` with every rank set to the b1 of the attached mesh. Prior
/// ranks that disagree, and cell flags on meshes that are not cells, are
/// listed in `report` (the cell flag itself is left unchanged). Throws
/// std::invalid_argument when a component has no mesh. Idempotent.
tower::Tower annotate_with_homology(const tower::Tower& t, AnnotationReport* report = nullptr);

struct Bound {
    std::size_t value = 0;
    std::size_t level = 0;  // first level attaining the minimum
    std::vector<std::size_t> level_totals;
};

/// Minimum level total rank: an upper bound for r at the available depth.
/// An empty tower, or one with an empty level, gives 0. Throws
/// tower::PreconditionError when a rank is missing.
Bound upper_bound_r(const tower::Tower& t);

// First `levels` levels of `t`.
tower::Tower truncate(const tower::Tower& t, std::size_t levels);

/// Semicontinuity along a chain of stages, each a prefix-refinement of the
/// next (same components and parents on shared levels, never shallower).
/// Fails, naming the stage, when stage bounds increase along the chain, when
/// the final bound exceeds the minimum stage bound, or when two stages
/// disagree on a shared rank. Throws std::invalid_argument for a malformed
/// chain.
Check check_semicontinuity(std::span<const tower::Tower> chain);

struct SubadditivityResult {
    Check partition;      // level totals of the halves add up exactly
    Check subadditivity;  // bound(K) >= bound(K0) + bound(K1) when certified
    Bound whole, below, above;
    bool certified = false;
};

/// Splits with constructions::plane_split (StraddleError propagates) and
/// compares bounds. The inequality is asserted only when both halves have
/// exact values: all components cells, or at most one component per level.
SubadditivityResult check_subadditivity(const tower::Tower& t, const constructions::AxisPlane& plane,
                                        std::size_t from_level = 0);

/// all components cells <=> all level ranks 0, each direction reported;
/// a cell flag on a component with nonzero rank fails the check.
Check check_nullity(const tower::Tower& t);

}  // namespace pmtower::analysis
