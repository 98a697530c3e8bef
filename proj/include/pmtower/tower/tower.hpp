#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pmtower/complex/simplicial_complex.hpp"
#include "pmtower/tower/substitution.hpp"

namespace pmtower::tower {

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

/// One connected component of a tower level (one of the C_i / D_ij).
struct Component {
    std::optional<std::size_t> rank;  // rk H_1 over Z2, when known
    bool is_cell = false;
    std::size_t parent = kNoParent;   // index into the previous level
    std::string mesh_ref;             // file reference, may be empty
    std::shared_ptr<const complex::SimplicialComplex3> mesh;
};

/// Finite truncation of a defining sequence N_0 > N_1 > ... : a forest of
/// components, one list per level, with child -> parent links between
/// consecutive levels.
struct Tower {
    std::vector<std::vector<Component>> levels;
    std::optional<std::size_t> declared_r;
    std::optional<bool> complement_not_simply_connected;
    std::optional<SubstitutionRule> rule;

    std::size_t depth() const noexcept { return levels.size(); }
    std::size_t component_count() const noexcept;

    // Indices (at level + 1) of the children of component `index` at `level`,
    // in increasing order.
    std::vector<std::size_t> children(std::size_t level, std::size_t index) const;

    // Level totals of rank annotations; nullopt if any component lacks one.
    std::optional<std::vector<std::size_t>> level_ranks() const;
};

/// Path of child indices from a root: entry 0 picks a level-0 component, entry
/// k picks the k-th child (children ordered by level index) of the previous
/// component.
struct BranchAddress {
    std::vector<std::size_t> path;
    friend bool operator==(const BranchAddress&, const BranchAddress&) = default;
    friend auto operator<=>(const BranchAddress&, const BranchAddress&) = default;
};

// Level-wise component indices visited by an address; throws
// std::invalid_argument if the address does not exist in the tower.
std::vector<std::size_t> resolve(const Tower& t, const BranchAddress& a);

// All full-depth branch addresses in lexicographic order.
std::vector<BranchAddress> all_branches(const Tower& t);

// Address of a deepest-level component.
BranchAddress address_of(const Tower& t, std::size_t deepest_index);

}  // namespace pmtower::tower
