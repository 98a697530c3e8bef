#include "pmtower/analysis/analysis.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "pmtower/parallel.hpp"
#include "pmtower/tower/checks.hpp"

namespace pmtower::analysis {

namespace {

Json betti_json(const complex::BettiVector& b) {
    return {{"b0", b.b0}, {"b1", b.b1}, {"b2", b.b2}, {"b3", b.b3}};
}

Json bound_json(const Bound& b) {
    return {{"upper_bound_r", b.value}, {"attained_at_level", b.level}, {"level_totals", b.level_totals}};
}

bool same_structure(const tower::Tower& a, const tower::Tower& b, std::size_t levels) {
    for (std::size_t k = 0; k < levels; ++k) {
        if (a.levels[k].size() != b.levels[k].size()) return false;
        for (std::size_t i = 0; i < a.levels[k].size(); ++i) {
            if (a.levels[k][i].parent != b.levels[k][i].parent) return false;
        }
    }
    return true;
}

// Exact value is known: all cells (r = 0) or one component per level.
bool exact_bound(const tower::Tower& t) {
    bool all_cells = true, single = true;
    for (const auto& level : t.levels) {
        single = single && level.size() <= 1;
        for (const auto& c : level) all_cells = all_cells && c.is_cell;
    }
    return all_cells || single;
}

}  // namespace

tower::Tower annotate_with_homology(const tower::Tower& t, AnnotationReport* report) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t k = 0; k < t.levels.size(); ++k) {
        for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
            if (!t.levels[k][i].mesh) {
                throw std::invalid_argument("annotate_with_homology: level " + std::to_string(k) + " component " +
                                            std::to_string(i) + " has no mesh");
            }
            slots.emplace_back(k, i);
        }
    }
    std::vector<complex::BettiVector> betti(slots.size());
    parallel_for(slots.size(), [&](std::size_t s) {
        betti[s] = complex::betti(*t.levels[slots[s].first][slots[s].second].mesh);
    });

    tower::Tower out = t;
    AnnotationReport rep;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        auto& c = out.levels[slots[s].first][slots[s].second];
        const auto& b = betti[s];
        const bool rank_bad = c.rank && *c.rank != b.b1;
        const bool cell_bad = c.is_cell && b != complex::BettiVector{1, 0, 0, 0};
        if (rank_bad || cell_bad) rep.discrepancies.push_back({slots[s].first, slots[s].second, c.rank, b, cell_bad});
        c.rank = b.b1;
    }
    rep.check.name = "homology_annotation";
    rep.check.status = rep.discrepancies.empty() ? Status::pass : Status::fail;
    rep.check.evidence["components"] = slots.size();
    Json list = Json::array();
    for (const auto& d : rep.discrepancies) {
        Json e;
        e["level"] = d.level;
        e["component"] = d.component;
        e["declared_rank"] = d.declared ? Json(*d.declared) : Json(nullptr);
        e["computed"] = betti_json(d.computed);
        if (d.cell_flag_contradicted) e["cell_flag_contradicted"] = true;
        list.push_back(std::move(e));
    }
    rep.check.evidence["discrepancies"] = list;
    if (report) *report = std::move(rep);
    return out;
}

Bound upper_bound_r(const tower::Tower& t) {
    const auto totals = t.level_ranks();
    if (!totals) throw tower::PreconditionError("upper_bound_r: rank annotations missing");
    Bound b;
    b.level_totals = *totals;
    if (totals->empty()) return b;
    const auto it = std::min_element(totals->begin(), totals->end());
    b.value = *it;
    b.level = static_cast<std::size_t>(it - totals->begin());
    return b;
}

tower::Tower truncate(const tower::Tower& t, std::size_t levels) {
    tower::Tower out = t;
    if (levels < out.levels.size()) out.levels.resize(levels);
    return out;
}

Check check_semicontinuity(std::span<const tower::Tower> chain) {
    if (chain.empty()) throw std::invalid_argument("check_semicontinuity: empty chain");
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
        if (chain[s + 1].depth() < chain[s].depth() || !same_structure(chain[s], chain[s + 1], chain[s].depth())) {
            throw std::invalid_argument("check_semicontinuity: stage " + std::to_string(s + 1) +
                                        " does not refine stage " + std::to_string(s));
        }
    }
    Check c{"semicontinuity", Status::pass, Json::object()};
    std::vector<Bound> bounds;
    for (const auto& stage : chain) bounds.push_back(upper_bound_r(stage));
    Json stages = Json::array();
    for (const auto& b : bounds) stages.push_back(bound_json(b));
    c.evidence["stages"] = stages;

    Json failures = Json::array();
    const tower::Tower& last = chain.back();
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
        for (std::size_t k = 0; k < chain[s].depth(); ++k) {
            for (std::size_t i = 0; i < chain[s].levels[k].size(); ++i) {
                if (chain[s].levels[k][i].rank != last.levels[k][i].rank) {
                    failures.push_back({{"stage", s}, {"level", k}, {"component", i},
                                        {"reason", "rank disagrees with the final stage"}});
                }
            }
        }
        if (bounds[s + 1].value > bounds[s].value) {
            failures.push_back({{"stage", s + 1}, {"reason", "bound increases along the chain"}});
        }
    }
    std::size_t min_stage = std::numeric_limits<std::size_t>::max();
    for (const auto& b : bounds) min_stage = std::min(min_stage, b.value);
    if (bounds.back().value > min_stage) {
        failures.push_back({{"stage", chain.size() - 1}, {"reason", "final bound exceeds the minimum stage bound"}});
    }
    c.evidence["final_bound"] = bounds.back().value;
    c.evidence["min_stage_bound"] = min_stage;
    if (!failures.empty()) {
        c.status = Status::fail;
        c.evidence["failures"] = failures;
    }
    return c;
}

SubadditivityResult check_subadditivity(const tower::Tower& t, const constructions::AxisPlane& plane,
                                        std::size_t from_level) {
    const auto halves = constructions::plane_split(t, plane, from_level);
    tower::Tower whole = t;
    if (from_level > 0) whole.levels.erase(whole.levels.begin(), whole.levels.begin() + static_cast<long>(from_level));

    SubadditivityResult r;
    r.whole = upper_bound_r(whole);
    r.below = upper_bound_r(halves.below);
    r.above = upper_bound_r(halves.above);
    const Json plane_json = {{"axis", plane.axis}, {"offset", plane.offset}, {"from_level", from_level}};

    r.partition = {"partition_identity", Status::pass, Json::object()};
    r.partition.evidence["plane"] = plane_json;
    Json bad = Json::array();
    for (std::size_t k = 0; k < r.whole.level_totals.size(); ++k) {
        if (r.whole.level_totals[k] != r.below.level_totals[k] + r.above.level_totals[k]) bad.push_back(k);
    }
    r.partition.evidence["whole"] = r.whole.level_totals;
    r.partition.evidence["below"] = r.below.level_totals;
    r.partition.evidence["above"] = r.above.level_totals;
    if (!bad.empty()) {
        r.partition.status = Status::fail;
        r.partition.evidence["failing_levels"] = bad;
    }

    r.certified = exact_bound(halves.below) && exact_bound(halves.above);
    r.subadditivity = {"subadditivity", Status::skipped, Json::object()};
    r.subadditivity.evidence["plane"] = plane_json;
    r.subadditivity.evidence["bound_whole"] = r.whole.value;
    r.subadditivity.evidence["bound_below"] = r.below.value;
    r.subadditivity.evidence["bound_above"] = r.above.value;
    r.subadditivity.evidence["certified"] = r.certified;
    if (r.certified) {
        const bool ok = r.whole.value >= r.below.value + r.above.value;
        r.subadditivity.status = ok ? Status::pass : Status::fail;
        r.subadditivity.evidence["relation"] = std::to_string(r.below.value) + " + " + std::to_string(r.above.value) +
                                              (ok ? " <= " : " > ") + std::to_string(r.whole.value);
    } else {
        r.subadditivity.evidence["note"] = "halves have no exact value at this depth; bounds reported only";
    }
    return r;
}

Check check_nullity(const tower::Tower& t) {
    bool all_cells = true, all_zero = true, ranks_known = true;
    Json violations = Json::array();
    for (std::size_t k = 0; k < t.levels.size(); ++k) {
        for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
            const auto& c = t.levels[k][i];
            all_cells = all_cells && c.is_cell;
            if (!c.rank) {
                ranks_known = false;
                continue;
            }
            all_zero = all_zero && *c.rank == 0;
            if (c.is_cell && *c.rank != 0) violations.push_back({{"level", k}, {"component", i}, {"rank", *c.rank}});
        }
    }
    Check c{"nullity", Status::pass, Json::object()};
    c.evidence["all_cells"] = all_cells;
    if (!ranks_known) {
        c.status = Status::skipped;
        c.evidence["note"] = "rank annotations missing";
        return c;
    }
    c.evidence["all_ranks_zero"] = all_zero;
    const bool forward = !all_cells || all_zero;   // cells => ranks 0
    const bool backward = !all_zero || all_cells;  // ranks 0 => cells
    c.evidence["cells_imply_rank_zero"] = forward;
    c.evidence["rank_zero_implies_cells"] = backward;
    if (!violations.empty()) c.evidence["cell_flag_with_nonzero_rank"] = violations;
    if (!forward || !backward || !violations.empty()) c.status = Status::fail;
    return c;
}

}  // namespace pmtower::analysis
