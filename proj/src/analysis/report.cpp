#include "pmtower/analysis/report.hpp"

#include <map>

#include "pmtower/analysis/analysis.hpp"
#include "pmtower/tower/checks.hpp"

namespace pmtower::analysis {

namespace {

bool has_all_meshes(const tower::Tower& t) {
    for (const auto& level : t.levels) {
        for (const auto& c : level) {
            if (!c.mesh) return false;
        }
    }
    return true;
}

bool has_all_ranks(const tower::Tower& t) { return t.level_ranks().has_value(); }

}  // namespace

AnalysisReport analyze(const tower::Tower& input, const AnalyzeOptions& opts) {
    tower::Tower t = input;
    if (opts.declared_r) t.declared_r = opts.declared_r;
    if (opts.complement_not_simply_connected) t.complement_not_simply_connected = true;
    if (opts.rule) t.rule = opts.rule;

    AnalysisReport rep;
    std::vector<Check> checks;

    if (!t.levels.empty() && has_all_meshes(t)) {
        AnnotationReport ar;
        t = annotate_with_homology(t, &ar);
        checks.push_back(ar.check);
        rep.inconsistent = rep.inconsistent || !ar.discrepancies.empty();
    } else {
        checks.push_back({"homology_annotation", Status::skipped, {{"note", "no meshes attached; declared ranks used"}}});
    }

    const auto validation = tower::validate_tower(t);
    for (const auto& c : validation.checks) {
        checks.push_back(c);
        if (c.status == Status::fail) rep.inconsistent = true;
    }
    const bool ranks = has_all_ranks(t);
    const bool structural = validation.structural_ok();

    bool claim1_all = true;
    if (structural && ranks) {
        for (const auto& r : tower::claim1_sweep(t)) {
            claim1_all = claim1_all && r.pass;
            checks.push_back({"claim1_" + std::to_string(r.k) + "_" + std::to_string(r.l),
                              r.pass ? Status::pass : Status::fail, tower::to_json(r)});
        }
    } else {
        claim1_all = false;
        checks.push_back({"claim1", Status::skipped, {{"note", "requires a valid nesting map and ranks"}}});
    }

    if (structural && ranks && !t.levels.empty() && !t.levels.back().empty()) {
        Json values = Json::array();
        std::map<std::size_t, std::size_t> histogram;
        std::size_t stable = 0;
        bool nonincreasing = true;
        for (const auto& a : tower::all_branches(t)) {
            const auto s = tower::s_value(t, a);
            for (std::size_t k = 1; k < s.ranks.size(); ++k) nonincreasing = nonincreasing && s.ranks[k] <= s.ranks[k - 1];
            ++histogram[s.value];
            stable += s.stable ? 1 : 0;
            values.push_back({{"branch", tower::to_json(a)}, {"s", s.value}, {"stable", s.stable}, {"ranks", s.ranks}});
        }
        Json hist = Json::array();
        for (const auto& [v, n] : histogram) hist.push_back({{"s", v}, {"branches", n}});
        checks.push_back({"s_value_sweep", Status::pass,
                          {{"branches", values.size()},
                           {"stable", stable},
                           {"branch_ranks_nonincreasing", nonincreasing},
                           {"histogram", hist},
                           {"values", values}}});
    } else {
        checks.push_back({"s_value_sweep", Status::skipped, {{"note", "requires a valid nesting map and ranks"}}});
    }

    Check ex{"exceptional_set", Status::skipped, Json::object()};
    try {
        if (!structural) throw tower::PreconditionError("tower fails structural validation");
        const auto es = tower::exceptional_set(t);
        Json pts = Json::array();
        for (const auto& p : es.points) pts.push_back(tower::to_json(p));
        ex.evidence["points"] = pts;
        ex.evidence["count"] = es.points.size();
        ex.evidence["declared_r"] = *t.declared_r;
        ex.status = es.consistent ? Status::pass : Status::fail;
        if (!es.consistent) {
            ex.evidence["note"] = es.note;
            rep.inconsistent = true;
        }
    } catch (const tower::PreconditionError& e) {
        ex.evidence["note"] = std::string("preconditions unmet: ") + e.what();
    }
    checks.push_back(ex);

    if (t.rule) {
        const auto v = tower::self_similarity_analysis(*t.rule, t.complement_not_simply_connected.value_or(false));
        const bool inconsistent_input = v.inconsistent_input;
        checks.push_back({"self_similarity", inconsistent_input ? Status::fail : Status::pass, tower::to_json(v)});
        rep.inconsistent = rep.inconsistent || inconsistent_input;
    } else {
        checks.push_back({"self_similarity", Status::skipped, {{"note", "no substitution rule"}}});
    }

    checks.push_back(ranks ? check_nullity(t) : Check{"nullity", Status::skipped, {{"note", "rank annotations missing"}}});

    const auto verdict = tower::rectifiability_verdict(t);

    Json bounds = Json::object();
    if (ranks) {
        const Bound b = upper_bound_r(t);
        bounds["upper_bound_r"] = b.value;
        bounds["attained_at_level"] = b.level;
        bounds["level_totals"] = b.level_totals;
        bounds["depth"] = t.depth();
        bounds["note"] = "upper bound valid at the available depth";
    } else {
        bounds["upper_bound_r"] = nullptr;
        bounds["note"] = "rank annotations missing";
    }
    switch (verdict.verdict) {
        case tower::Rectifiability::certificate_r0: bounds["limit_value"] = 0; break;
        case tower::Rectifiability::obstruction: bounds["limit_value"] = "inf"; break;
        case tower::Rectifiability::inconclusive: bounds["limit_value"] = nullptr; break;
    }
    if (!claim1_all && ranks && structural && t.depth() >= 2) {
        bounds["rank_minimal"] = false;
    }

    Json j;
    j["instance"] = opts.instance;
    Json cj = Json::array();
    for (const auto& c : checks) {
        cj.push_back(to_json(c));
        rep.summary += c.name + ": " + std::string(to_string(c.status)) + "\n";
    }
    j["checks"] = cj;
    j["bounds"] = bounds;
    j["verdict"] = {{"rectifiability", std::string(tower::to_string(verdict.verdict))}, {"evidence", verdict.evidence}};
    rep.summary += "verdict: " + std::string(tower::to_string(verdict.verdict)) + "\n";
    rep.json = std::move(j);
    return rep;
}

}  // namespace pmtower::analysis
