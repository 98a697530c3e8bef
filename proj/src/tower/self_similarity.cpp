#include <algorithm>

#include "pmtower/tower/checks.hpp"

namespace pmtower::tower {

std::string_view to_string(SelfSimilarOutcome o) {
    switch (o) {
        case SelfSimilarOutcome::r_infinite: return "r = inf";
        case SelfSimilarOutcome::r_zero: return "r = 0";
        case SelfSimilarOutcome::zero_or_infinite: return "r in {0, inf}, undetermined";
        case SelfSimilarOutcome::no_conclusion: return "no conclusion";
    }
    return "unknown";
}

std::string_view to_string(Rectifiability r) {
    switch (r) {
        case Rectifiability::certificate_r0: return "CERTIFICATE_R0";
        case Rectifiability::obstruction: return "OBSTRUCTION";
        case Rectifiability::inconclusive: return "INCONCLUSIVE";
    }
    return "unknown";
}

SelfSimilarityVerdict self_similarity_analysis(const SubstitutionRule& rule, bool complement_not_simply_connected) {
    SelfSimilarityVerdict v;
    if (const auto problem = rule_problem(rule); !problem.empty()) {
        v.derivation.push_back("invalid rule: " + problem);
        return v;
    }
    const auto& top = rule.types.front();
    v.copies = static_cast<std::size_t>(std::count(top.children.begin(), top.children.end(), top.name));
    const bool all_cells = std::all_of(rule.types.begin(), rule.types.end(), [](const auto& t) { return t.is_cell; });
    const std::string n = std::to_string(v.copies);

    if (v.copies >= 2) {
        v.derivation.push_back("type '" + top.name + "' contains " + n + " disjoint copies of itself");
        v.derivation.push_back("additivity over disjoint pieces: r = n·r with n = " + n + ", i.e. r = " + n + "·r");
        v.derivation.push_back("n >= 2, so r ∈ {0, ∞}");
        v.outcome = SelfSimilarOutcome::zero_or_infinite;
    } else {
        v.derivation.push_back("type '" + top.name + "' produces " + n + " copies of itself; no fixed-point equation");
    }

    if (all_cells && complement_not_simply_connected) {
        v.derivation.push_back("inconsistent input: every type is a 3-cell, which forces r = 0, but the complement "
                               "is declared not simply connected");
        v.outcome = SelfSimilarOutcome::no_conclusion;
        v.inconsistent_input = true;
    } else if (all_cells) {
        v.derivation.push_back("every type is a 3-cell: r = 0 by the nullity property");
        v.outcome = SelfSimilarOutcome::r_zero;
    } else if (complement_not_simply_connected && v.outcome == SelfSimilarOutcome::zero_or_infinite) {
        v.derivation.push_back("complement not simply connected: r = 0 would make every component a 3-cell, so r ≥ 1");
        v.derivation.push_back("r ≥ 1 and r ∈ {0, ∞}: r = ∞");
        v.outcome = SelfSimilarOutcome::r_infinite;
    } else if (v.outcome == SelfSimilarOutcome::zero_or_infinite) {
        v.derivation.push_back("no complement information: r = 0 not excluded");
    }
    return v;
}

RectifiabilityVerdict rectifiability_verdict(const Tower& t) {
    RectifiabilityVerdict out;
    bool all_cells = !t.levels.empty();
    bool cell_ranks_zero = true;
    for (const auto& level : t.levels) {
        for (const auto& c : level) {
            all_cells = all_cells && c.is_cell;
            if (c.is_cell && c.rank && *c.rank != 0) cell_ranks_zero = false;
        }
    }
    out.evidence["depth"] = t.depth();
    out.evidence["all_cells"] = all_cells;
    if (all_cells && cell_ranks_zero) {
        out.verdict = Rectifiability::certificate_r0;
        out.evidence["basis"] = "every component of every level is a 3-cell";
        out.evidence["r"] = 0;
        return out;
    }
    if (all_cells) out.evidence["note"] = "cell flags contradict nonzero rank annotations";

    const bool flag = t.complement_not_simply_connected.value_or(false);
    out.evidence["complement_not_simply_connected"] =
        t.complement_not_simply_connected ? Json(*t.complement_not_simply_connected) : Json(nullptr);
    if (t.rule) {
        const auto ss = self_similarity_analysis(*t.rule, flag);
        out.evidence["self_similarity"] = to_json(ss);
        if (ss.outcome == SelfSimilarOutcome::r_infinite) {
            out.verdict = Rectifiability::obstruction;
            out.evidence["basis"] = "self-similarity with nontrivial complement forces r = ∞; not rectifiable";
            out.evidence["r"] = "inf";
            return out;
        }
    } else {
        out.evidence["self_similarity"] = nullptr;
    }
    out.evidence["basis"] = "finite-depth data admits neither a cell certificate nor an obstruction";
    return out;
}

Json to_json(const SelfSimilarityVerdict& v) {
    Json j;
    j["outcome"] = std::string(to_string(v.outcome));
    j["copies"] = v.copies;
    if (v.inconsistent_input) j["inconsistent_input"] = true;
    j["derivation"] = v.derivation;
    return j;
}

}  // namespace pmtower::tower
