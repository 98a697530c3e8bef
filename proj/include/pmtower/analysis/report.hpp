#pragma once

#include <optional>
#include <string>

#include "pmtower/report.hpp"
#include "pmtower/tower/tower.hpp"

namespace pmtower::analysis {

struct AnalyzeOptions {
    std::string instance;
    std::optional<std::size_t> declared_r;          // overrides the descriptor
    bool complement_not_simply_connected = false;   // sets the flag when true
    std::optional<tower::SubstitutionRule> rule;    // overrides the descriptor
};

struct AnalysisReport {
    Json json;             // {instance, checks, bounds, verdict}
    bool inconsistent = false;
    std::string summary;   // one line per check, for humans
};

/// Full pipeline: homology annotation when meshes are attached, validation,
/// Claim 1 sweep, s-value sweep, exceptional set, self-similarity (when a
/// rule is present), nullity and the rectifiability verdict.
///
/// `inconsistent` is set when declared data contradict the tower: a
/// homology discrepancy, a structural failure, (N3) failing against
/// declared_r, more exceptional points than declared_r, or an inconsistent
/// self-similarity input. A Claim 1 failure is a finding about the tower (it
/// is not rank-minimal) and does not set it.
AnalysisReport analyze(const tower::Tower& t, const AnalyzeOptions& opts);

}  // namespace pmtower::analysis
