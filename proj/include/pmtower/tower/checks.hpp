#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmtower/report.hpp"
#include "pmtower/tower/tower.hpp"

namespace pmtower::tower {

/// Raised when an analysis is asked to run on a tower that does not meet its
/// preconditions (as opposed to a tower whose annotations are inconsistent,
/// which is reported, not thrown).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ValidationReport {
    bool nesting_ok = true;     // (N1) as recorded by the nesting map
    bool productive = true;     // (N2)
    bool annotations_ok = true; // ranks present where needed, cell => rank 0
    std::optional<bool> rank_constant;  // (N3); empty when declared_r unset or ranks missing
    std::vector<Check> checks;

    bool structural_ok() const { return nesting_ok && productive && annotations_ok; }
};

/// Structural conditions of a defining sequence. (N4) quantifies over all
/// pm-neighbourhoods and is reported as assumed, never verified.
ValidationReport validate_tower(const Tower& t);

struct Claim1Entry {
    std::size_t component = 0;  // index at level k
    std::size_t rank = 0;
    std::size_t descendant_sum = 0;
    std::size_t descendants = 0;
    bool ok = false;
};

struct Claim1Report {
    std::size_t k = 0, l = 0;
    bool pass = true;
    std::vector<Claim1Entry> entries;
    std::string note;
};

/// rk H1(C_i) == sum of rk H1 over the level-l components inside C_i, for
/// every component C_i of level k. Throws PreconditionError on missing ranks
/// or bad levels.
Claim1Report claim1_check(const Tower& t, std::size_t k, std::size_t l);

// claim1_check for every consecutive level pair; empty for single-level towers.
std::vector<Claim1Report> claim1_sweep(const Tower& t);

struct SValue {
    std::size_t value = 0;
    bool stable = false;
    std::vector<std::size_t> ranks;  // along the branch, level 0 first
};

/// Finite-depth stand-in for s(p) = lim rk H1(C(N_k; p)): the rank at the
/// deepest level. `stable` requires the last two branch ranks to agree and
/// the tower to pass claim1_check on the last two levels.
SValue s_value(const Tower& t, const BranchAddress& p);

struct ExceptionalSet {
    std::vector<BranchAddress> points;
    bool consistent = true;  // points.size() <= declared_r
    std::string note;
};

/// Deepest-level branches with s_value > 0. Requires declared_r, complete
/// rank annotations and Claim 1 on every consecutive level pair
/// (PreconditionError otherwise). More than declared_r points is reported as
/// an inconsistency, never truncated.
ExceptionalSet exceptional_set(const Tower& t);

enum class SelfSimilarOutcome { r_infinite, r_zero, zero_or_infinite, no_conclusion };
std::string_view to_string(SelfSimilarOutcome o);

struct SelfSimilarityVerdict {
    SelfSimilarOutcome outcome = SelfSimilarOutcome::no_conclusion;
    std::size_t copies = 0;  // self-copies produced by the analysed type
    bool inconsistent_input = false;  // all-cell rule with a nontrivial complement
    std::vector<std::string> derivation;
};

/// Additivity over the disjoint self-similar pieces gives r = n r for a type
/// producing n >= 2 copies of itself, so r is 0 or infinite. A
/// non-simply-connected complement (an input fact) rules out 0 via the
/// nullity property; an all-cell rule gives 0 directly.
SelfSimilarityVerdict self_similarity_analysis(const SubstitutionRule& rule, bool complement_not_simply_connected);

enum class Rectifiability { certificate_r0, obstruction, inconclusive };
std::string_view to_string(Rectifiability r);

struct RectifiabilityVerdict {
    Rectifiability verdict = Rectifiability::inconclusive;
    Json evidence = Json::object();
};

/// CERTIFICATE_R0 when every component of every level is a cell (rank 0),
/// OBSTRUCTION when the attached rule and complement flag force r = infinity,
/// INCONCLUSIVE otherwise.
RectifiabilityVerdict rectifiability_verdict(const Tower& t);

Json to_json(const ValidationReport& r);
Json to_json(const Claim1Report& r);
Json to_json(const SelfSimilarityVerdict& v);
Json to_json(const BranchAddress& a);

}  // namespace pmtower::tower
