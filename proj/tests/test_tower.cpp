#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "oracles/tower_oracle.hpp"
#include "pmtower/tower/checks.hpp"
#include "pmtower/tower/tower_io.hpp"

using namespace pmtower;
using namespace pmtower::tower;

namespace {

struct Node {
    std::size_t rank;
    std::size_t parent = kNoParent;
    bool cell = false;
};

Tower make_tower(std::vector<std::vector<Node>> levels, std::optional<std::size_t> declared_r = {}) {
    Tower t;
    t.declared_r = declared_r;
    for (const auto& level : levels) {
        std::vector<Component> out;
        for (const auto& n : level) {
            Component c;
            c.rank = n.rank;
            c.parent = n.parent;
            c.is_cell = n.cell;
            out.push_back(c);
        }
        t.levels.push_back(std::move(out));
    }
    return t;
}

// Necklace rank profile: one root of rank 1, each component has n children of rank 1.
Tower necklace_profile(std::size_t n, std::size_t depth) {
    std::vector<std::vector<Node>> levels{{{1}}};
    for (std::size_t k = 1; k <= depth; ++k) {
        std::vector<Node> level;
        for (std::size_t p = 0; p < levels.back().size(); ++p) {
            for (std::size_t j = 0; j < n; ++j) level.push_back({1, p});
        }
        levels.push_back(std::move(level));
    }
    return make_tower(std::move(levels));
}

const Check& find(const std::vector<Check>& checks, const std::string& name) {
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    REQUIRE(it != checks.end());
    return *it;
}

}  // namespace

TEST_CASE("tower navigation") {
    const auto t = make_tower({{{2}}, {{1, 0}, {1, 0}}, {{1, 0}, {0, 1}, {1, 1}}});
    CHECK(t.component_count() == 6);
    CHECK(t.children(1, 1) == std::vector<std::size_t>{1, 2});
    CHECK(t.level_ranks() == std::vector<std::size_t>{2, 2, 2});
    const auto branches = all_branches(t);
    REQUIRE(branches.size() == 3);
    CHECK(branches[2].path == std::vector<std::size_t>{0, 1, 1});
    CHECK(resolve(t, branches[2]) == std::vector<std::size_t>{0, 1, 2});
    CHECK(address_of(t, 2) == branches[2]);
    CHECK_THROWS_AS(resolve(t, BranchAddress{{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(resolve(t, BranchAddress{{1}}), std::invalid_argument);

    Tower unknown = t;
    unknown.levels[2][0].rank.reset();
    CHECK_FALSE(unknown.level_ranks().has_value());
}

TEST_CASE("validate_tower") {
    // Cell chain with declared_r = 0.
    auto cells = make_tower({{{0, kNoParent, true}}, {{0, 0, true}, {0, 0, true}}}, 0);
    auto r = validate_tower(cells);
    CHECK(r.structural_ok());
    CHECK(r.rank_constant == true);
    CHECK(find(r.checks, "N4_minimality").status == Status::assumed);

    auto necklace = necklace_profile(4, 2);
    necklace.declared_r = 1;
    r = validate_tower(necklace);
    CHECK(r.structural_ok());
    CHECK(r.rank_constant == false);
    const auto& n3 = find(r.checks, "N3_constant_rank");
    CHECK(n3.status == Status::fail);
    CHECK(n3.evidence["failing_levels"][0]["level"] == 1);
    CHECK(n3.evidence["failing_levels"][0]["rank"] == 4);

    auto steady = make_tower({{{2}}, {{2, 0}}, {{2, 0}}, {{2, 0}}}, 2);
    CHECK(validate_tower(steady).rank_constant == true);

    steady.declared_r.reset();
    CHECK(find(validate_tower(steady).checks, "N3_constant_rank").status == Status::skipped);

    auto orphan = make_tower({{{1}}, {{1, 3}}});
    CHECK_FALSE(validate_tower(orphan).nesting_ok);

    auto barren = make_tower({{{1}, {1}}, {{1, 0}}});
    CHECK_FALSE(validate_tower(barren).productive);

    auto bad_cell = make_tower({{{1, kNoParent, true}}});
    CHECK_FALSE(validate_tower(bad_cell).annotations_ok);
}

TEST_CASE("claim 1") {
    const auto ok = make_tower({{{2}}, {{1, 0}, {1, 0}}});
    const auto rep = claim1_check(ok, 0, 1);
    CHECK(rep.pass);
    CHECK(rep.entries[0].descendant_sum == 2);
    CHECK(rep.entries[0].descendants == 2);

    CHECK_FALSE(claim1_check(make_tower({{{1}}, {{0, 0}, {0, 0}}}), 0, 1).pass);

    const auto necklace = necklace_profile(4, 2);
    const auto fail = claim1_check(necklace, 0, 1);
    CHECK_FALSE(fail.pass);
    CHECK(fail.entries[0].rank == 1);
    CHECK(fail.entries[0].descendant_sum == 4);
    CHECK_FALSE(fail.note.empty());
    CHECK(claim1_check(necklace, 0, 2).entries[0].descendant_sum == 16);
    CHECK(claim1_sweep(necklace).size() == 2);

    CHECK_THROWS_AS(claim1_check(necklace, 2, 1), PreconditionError);
    CHECK_THROWS_AS(claim1_check(necklace, 0, 3), PreconditionError);
    auto missing = necklace;
    missing.levels[1][2].rank.reset();
    CHECK_THROWS_AS(claim1_check(missing, 0, 1), PreconditionError);
}

TEST_CASE("s_value") {
    // Branch 3,2,1,1,1 with a sibling carrying the remaining rank.
    const auto t = make_tower({{{3}}, {{2, 0}, {1, 0}}, {{1, 0}, {1, 0}, {1, 1}}, {{1, 0}, {1, 1}, {1, 2}},
                               {{1, 0}, {1, 1}, {1, 2}}});
    const auto s = s_value(t, BranchAddress{{0, 0, 0, 0, 0}});
    CHECK(s.ranks == std::vector<std::size_t>{3, 2, 1, 1, 1});
    CHECK(s.value == 1);
    CHECK(s.stable);

    const auto cells = make_tower({{{0, kNoParent, true}}, {{0, 0, true}}, {{0, 0, true}}});
    const auto sc = s_value(cells, BranchAddress{{0, 0, 0}});
    CHECK(sc.value == 0);
    CHECK(sc.stable);

    const auto necklace = necklace_profile(4, 2);
    const auto sn = s_value(necklace, BranchAddress{{0, 1, 3}});
    CHECK(sn.ranks == std::vector<std::size_t>{1, 1, 1});
    CHECK(sn.value == 1);
    CHECK_FALSE(sn.stable);

    CHECK_THROWS_AS(s_value(necklace, BranchAddress{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(s_value(necklace, BranchAddress{{0, 4, 0}}), std::invalid_argument);
}

TEST_CASE("s_value does not depend on sibling order") {
    // Same tower with the two level-1 children swapped.
    const auto a = make_tower({{{2}}, {{2, 0}, {0, 0}}, {{1, 0}, {1, 0}, {0, 1}}});
    const auto b = make_tower({{{2}}, {{0, 0}, {2, 0}}, {{0, 0}, {1, 1}, {1, 1}}});
    CHECK(s_value(a, BranchAddress{{0, 0, 1}}).value == s_value(b, BranchAddress{{0, 1, 1}}).value);
    CHECK(s_value(a, BranchAddress{{0, 1, 0}}).value == s_value(b, BranchAddress{{0, 0, 0}}).value);
    auto da = a, db = b;
    da.declared_r = db.declared_r = 2;
    CHECK(exceptional_set(da).points.size() == exceptional_set(db).points.size());
}

TEST_CASE("exceptional set") {
    auto two = make_tower({{{2}}, {{1, 0}, {1, 0}, {0, 0}}, {{1, 0}, {0, 0}, {1, 1}, {0, 2}}}, 2);
    const auto e = exceptional_set(two);
    CHECK(e.consistent);
    REQUIRE(e.points.size() == 2);
    CHECK(e.points[0].path == std::vector<std::size_t>{0, 0, 0});
    CHECK(e.points[1].path == std::vector<std::size_t>{0, 1, 0});

    const auto cells = make_tower({{{0, kNoParent, true}}, {{0, 0, true}, {0, 0, true}}}, 0);
    CHECK(exceptional_set(cells).points.empty());

    auto three = make_tower({{{3}}, {{1, 0}, {1, 0}, {1, 0}}}, 1);
    const auto bad = exceptional_set(three);
    CHECK_FALSE(bad.consistent);
    CHECK(bad.points.size() == 3);
    CHECK_FALSE(bad.note.empty());

    auto undeclared = two;
    undeclared.declared_r.reset();
    CHECK_THROWS_AS(exceptional_set(undeclared), PreconditionError);
    auto necklace = necklace_profile(4, 1);
    necklace.declared_r = 4;
    CHECK_THROWS_AS(exceptional_set(necklace), PreconditionError);
    CHECK_THROWS_AS(exceptional_set(Tower{}), PreconditionError);
}

TEST_CASE("self-similarity") {
    const auto antoine = SubstitutionRule::self_similar("necklace", 4, 1, false);
    auto v = self_similarity_analysis(antoine, true);
    CHECK(v.outcome == SelfSimilarOutcome::r_infinite);
    CHECK(v.copies == 4);
    const bool has_equation = std::any_of(v.derivation.begin(), v.derivation.end(),
                                          [](const std::string& s) { return s.find("r = 4·r") != std::string::npos; });
    CHECK(has_equation);

    v = self_similarity_analysis(antoine, false);
    CHECK(v.outcome == SelfSimilarOutcome::zero_or_infinite);

    const auto cells = SubstitutionRule::self_similar("cell", 2, 0, true);
    CHECK(self_similarity_analysis(cells, false).outcome == SelfSimilarOutcome::r_zero);
    const auto clash = self_similarity_analysis(cells, true);
    CHECK(clash.outcome == SelfSimilarOutcome::no_conclusion);
    CHECK(clash.inconsistent_input);

    const auto single = SubstitutionRule::self_similar("tube", 1, 1, false);
    CHECK(self_similarity_analysis(single, true).outcome == SelfSimilarOutcome::no_conclusion);

    SubstitutionRule broken;
    broken.types.push_back({"a", {"b"}, 1, false});
    CHECK_FALSE(rule_problem(broken).empty());
    CHECK(self_similarity_analysis(broken, true).outcome == SelfSimilarOutcome::no_conclusion);
    CHECK(rule_problem(antoine).empty());
}

TEST_CASE("rectifiability verdict") {
    const auto cells = make_tower({{{0, kNoParent, true}}, {{0, 0, true}, {0, 0, true}}});
    CHECK(rectifiability_verdict(cells).verdict == Rectifiability::certificate_r0);

    auto necklace = necklace_profile(4, 2);
    necklace.rule = SubstitutionRule::self_similar("necklace", 4, 1, false);
    CHECK(rectifiability_verdict(necklace).verdict == Rectifiability::inconclusive);
    necklace.complement_not_simply_connected = true;
    const auto v = rectifiability_verdict(necklace);
    CHECK(v.verdict == Rectifiability::obstruction);
    CHECK(v.evidence.dump().find("r = 4·r") != std::string::npos);
    CHECK(to_string(v.verdict) == "OBSTRUCTION");

    necklace.rule.reset();
    CHECK(rectifiability_verdict(necklace).verdict == Rectifiability::inconclusive);
}

TEST_CASE("descriptor round trip") {
    auto t = necklace_profile(3, 1);
    t.declared_r = 1;
    t.complement_not_simply_connected = true;
    t.rule = SubstitutionRule::self_similar("necklace", 3, 1, false);
    t.levels[1][0].mesh_ref = "solids/L1_C0.tets.json";
    const auto j = to_json(t);
    CHECK(j["schema"] == kTowerSchema);
    CHECK(j.begin().key() == "schema");
    const auto back = tower_from_json(nlohmann::json::parse(j.dump()));
    CHECK(to_json(back).dump() == j.dump());
    CHECK(back.rule == t.rule);
    CHECK(back.levels[0][0].parent == kNoParent);
    CHECK(back.levels[1][2].parent == 0);

    const auto rule = rule_from_json(nlohmann::json::parse(to_json(*t.rule).dump()));
    CHECK(rule == *t.rule);

    using nlohmann::json;
    for (const char* bad : {R"({"schema":"pmtower.tower/9","levels":[]})", R"({"schema":"pmtower.tower/1"})",
                            R"({"schema":"pmtower.tower/1","levels":[[{"rank":-1}]]})",
                            R"({"schema":"pmtower.tower/1","levels":[[{"rank":1,"mesh_ref":3}]]})",
                            R"({"schema":"pmtower.tower/1","levels":[{"rank":1}]})"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(tower_from_json(json::parse(bad)), SchemaError);
    }
    CHECK_THROWS_AS(rule_from_json(json::parse(R"({"types":[{"name":"a","children":["b"]}]})")), SchemaError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/tower.json"), SchemaError);
}

TEST_CASE("synthetic towers respect the exceptional point bound") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto t = oracle::synthetic_tower(rng);
        const auto v = validate_tower(t);
        REQUIRE(v.structural_ok());
        REQUIRE(v.rank_constant == true);
        for (const auto& rep : claim1_sweep(t)) REQUIRE(rep.pass);
        for (const auto& a : all_branches(t)) {
            const auto s = s_value(t, a);
            CHECK(std::is_sorted(s.ranks.rbegin(), s.ranks.rend()));
            CHECK(s.stable == (s.ranks[s.ranks.size() - 1] == s.ranks[s.ranks.size() - 2]));
        }
        const auto e = exceptional_set(t);
        CHECK(e.consistent);
        CHECK(e.points.size() <= *t.declared_r);
    }
}
