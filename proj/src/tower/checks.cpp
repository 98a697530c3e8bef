#include "pmtower/tower/checks.hpp"

#include <algorithm>
#include <sstream>

namespace pmtower::tower {

namespace {

bool all_ranks_present(const Tower& t) {
    for (const auto& level : t.levels) {
        for (const auto& c : level) {
            if (!c.rank) return false;
        }
    }
    return true;
}

// Ancestor at level k of component `idx` at level l (k <= l).
std::size_t ancestor(const Tower& t, std::size_t l, std::size_t idx, std::size_t k) {
    while (l > k) {
        idx = t.levels[l][idx].parent;
        --l;
    }
    return idx;
}

}  // namespace

ValidationReport validate_tower(const Tower& t) {
    ValidationReport r;

    Json nesting_bad = Json::array();
    for (std::size_t k = 0; k < t.levels.size(); ++k) {
        for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
            const std::size_t p = t.levels[k][i].parent;
            const bool ok = k == 0 ? p == kNoParent : p < t.levels[k - 1].size();
            if (!ok) nesting_bad.push_back({{"level", k}, {"component", i}});
        }
    }
    r.nesting_ok = nesting_bad.empty();
    Check n1{"N1_nested", r.nesting_ok ? Status::pass : Status::fail, Json::object()};
    n1.evidence["basis"] = "nesting map: every level-(k+1) component has exactly one parent at level k";
    if (!r.nesting_ok) n1.evidence["violations"] = nesting_bad;
    r.checks.push_back(n1);

    Json barren = Json::array();
    if (r.nesting_ok) {
        for (std::size_t k = 0; k + 1 < t.levels.size(); ++k) {
            std::vector<bool> has_child(t.levels[k].size(), false);
            for (const auto& c : t.levels[k + 1]) has_child[c.parent] = true;
            for (std::size_t i = 0; i < has_child.size(); ++i) {
                if (!has_child[i]) barren.push_back({{"level", k}, {"component", i}});
            }
        }
    }
    r.productive = r.nesting_ok && barren.empty();
    Check n2{"N2_meets_set", r.productive ? Status::pass : Status::fail, Json::object()};
    n2.evidence["basis"] = "every component has a child at the next available level";
    if (!barren.empty()) n2.evidence["barren"] = barren;
    if (!r.nesting_ok) n2.evidence["note"] = "nesting map invalid";
    r.checks.push_back(n2);

    Json bad_cells = Json::array();
    for (std::size_t k = 0; k < t.levels.size(); ++k) {
        for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
            const Component& c = t.levels[k][i];
            if (c.is_cell && c.rank && *c.rank != 0) {
                bad_cells.push_back({{"level", k}, {"component", i}, {"rank", *c.rank}});
            }
        }
    }
    r.annotations_ok = bad_cells.empty();
    Check cells{"cell_implies_rank_zero", r.annotations_ok ? Status::pass : Status::fail, Json::object()};
    if (!bad_cells.empty()) cells.evidence["violations"] = bad_cells;
    r.checks.push_back(cells);

    Check n3{"N3_constant_rank", Status::skipped, Json::object()};
    if (!t.declared_r) {
        n3.evidence["note"] = "declared_r not set";
    } else if (const auto ranks = t.level_ranks(); !ranks) {
        n3.evidence["note"] = "rank annotations missing";
        r.annotations_ok = false;
    } else {
        Json failing = Json::array();
        for (std::size_t k = 0; k < ranks->size(); ++k) {
            if ((*ranks)[k] != *t.declared_r) failing.push_back({{"level", k}, {"rank", (*ranks)[k]}});
        }
        r.rank_constant = failing.empty();
        n3.status = failing.empty() ? Status::pass : Status::fail;
        n3.evidence["declared_r"] = *t.declared_r;
        n3.evidence["level_ranks"] = *ranks;
        if (!failing.empty()) n3.evidence["failing_levels"] = failing;
    }
    r.checks.push_back(n3);

    Check n4{"N4_minimality", Status::assumed, Json::object()};
    n4.evidence["note"] = "declared, not verified: quantifies over every pm-neighbourhood inside N_1";
    r.checks.push_back(n4);
    return r;
}

Claim1Report claim1_check(const Tower& t, std::size_t k, std::size_t l) {
    if (k > l || l >= t.depth()) throw PreconditionError("claim1_check: need k <= l < depth");
    for (std::size_t level : {k, l}) {
        for (const auto& c : t.levels[level]) {
            if (!c.rank) throw PreconditionError("claim1_check: rank annotations missing");
        }
    }
    for (std::size_t level = k + 1; level <= l; ++level) {
        for (const auto& c : t.levels[level]) {
            if (c.parent >= t.levels[level - 1].size()) throw PreconditionError("claim1_check: broken nesting map");
        }
    }
    Claim1Report r;
    r.k = k;
    r.l = l;
    r.entries.resize(t.levels[k].size());
    for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
        r.entries[i].component = i;
        r.entries[i].rank = *t.levels[k][i].rank;
    }
    for (std::size_t j = 0; j < t.levels[l].size(); ++j) {
        Claim1Entry& e = r.entries[ancestor(t, l, j, k)];
        e.descendant_sum += *t.levels[l][j].rank;
        ++e.descendants;
    }
    for (auto& e : r.entries) {
        e.ok = e.rank == e.descendant_sum;
        r.pass = r.pass && e.ok;
    }
    if (!r.pass) {
        r.note = "rank is not additive over descendants: the tower is not rank-minimal, so no finite "
                 "declared_r satisfies (N3)/(N4) on these levels";
    }
    return r;
}

std::vector<Claim1Report> claim1_sweep(const Tower& t) {
    std::vector<Claim1Report> out;
    for (std::size_t k = 0; k + 1 < t.depth(); ++k) out.push_back(claim1_check(t, k, k + 1));
    return out;
}

SValue s_value(const Tower& t, const BranchAddress& p) {
    if (p.path.size() != t.depth()) throw std::invalid_argument("s_value: address must reach the deepest level");
    const auto idx = resolve(t, p);
    SValue s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& c = t.levels[k][idx[k]];
        if (!c.rank) throw PreconditionError("s_value: rank annotations missing on the branch");
        s.ranks.push_back(*c.rank);
    }
    s.value = s.ranks.back();
    const std::size_t d = t.depth();
    if (d >= 2 && s.ranks[d - 1] == s.ranks[d - 2]) s.stable = claim1_check(t, d - 2, d - 1).pass;
    return s;
}

ExceptionalSet exceptional_set(const Tower& t) {
    if (t.levels.empty()) throw PreconditionError("exceptional_set: empty tower");
    if (!t.declared_r) throw PreconditionError("exceptional_set: declared_r not set");
    if (!all_ranks_present(t)) throw PreconditionError("exceptional_set: rank annotations missing");
    for (const auto& rep : claim1_sweep(t)) {
        if (!rep.pass) {
            throw PreconditionError("exceptional_set: Claim 1 fails between levels " + std::to_string(rep.k) +
                                    " and " + std::to_string(rep.l));
        }
    }
    ExceptionalSet out;
    for (const auto& a : all_branches(t)) {
        if (s_value(t, a).value > 0) out.points.push_back(a);
    }
    out.consistent = out.points.size() <= *t.declared_r;
    if (!out.consistent) {
        std::ostringstream msg;
        msg << out.points.size() << " branches keep positive rank but declared_r = " << *t.declared_r
            << "; the annotations contradict the bound on exceptional points";
        out.note = msg.str();
    }
    return out;
}

Json to_json(const BranchAddress& a) { return Json(a.path); }

Json to_json(const ValidationReport& r) {
    Json j;
    j["structural_ok"] = r.structural_ok();
    j["rank_constant"] = r.rank_constant ? Json(*r.rank_constant) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(pmtower::to_json(c));
    j["checks"] = checks;
    return j;
}

Json to_json(const Claim1Report& r) {
    Json j;
    j["k"] = r.k;
    j["l"] = r.l;
    j["pass"] = r.pass;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"component", e.component},
                           {"rank", e.rank},
                           {"descendant_sum", e.descendant_sum},
                           {"descendants", e.descendants},
                           {"ok", e.ok}});
    }
    j["entries"] = entries;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace pmtower::tower
