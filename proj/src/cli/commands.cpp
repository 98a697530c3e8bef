#include "pmtower/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pmtower/analysis/report.hpp"
#include "pmtower/complex/homology.hpp"
#include "pmtower/complex/mesh_io.hpp"
#include "pmtower/constructions/cells.hpp"
#include "pmtower/constructions/spec_io.hpp"
#include "pmtower/parallel.hpp"
#include "pmtower/tower/tower_io.hpp"

namespace pmtower::cli {

namespace fs = std::filesystem;

namespace {

Json betti_json(const complex::BettiVector& b) {
    return {{"b0", b.b0}, {"b1", b.b1}, {"b2", b.b2}, {"b3", b.b3}};
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    os << text;
    if (!os) throw std::runtime_error("write failed for " + p.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string instance_name(const constructions::GenerateSpec& spec) {
    std::ostringstream s;
    if (const auto* n = std::get_if<constructions::NecklaceSpec>(&spec.object)) {
        s << "necklace n=" << n->n << " depth=" << n->depth;
        if (n->roots > 1) s << " roots=" << n->roots;
    } else {
        const auto& c = std::get<constructions::CellSpec>(spec.object);
        s << "cells points=" << c.points.size() << " depth=" << c.depth;
    }
    return s.str();
}

}  // namespace

int cmd_generate(const fs::path& spec_path, const fs::path& out, std::optional<std::size_t> budget,
                 std::ostream& stdout_, std::ostream& stderr_) {
    constructions::GenerateSpec spec;
    try {
        spec = constructions::spec_from_json(tower::read_json_file(spec_path));
    } catch (const std::exception& e) {
        stderr_ << "error: invalid spec: " << e.what() << "\n";
        return kInputError;
    }

    tower::Tower t;
    Json certificates = Json::array();
    try {
        if (auto* n = std::get_if<constructions::NecklaceSpec>(&spec.object)) {
            if (budget) n->budget = *budget;
            auto built = constructions::build_necklace_tower(*n);
            t = std::move(built.tower);
            for (const auto& c : built.certificates) certificates.push_back(to_json(c));
        } else {
            const auto& c = std::get<constructions::CellSpec>(spec.object);
            t = constructions::build_cell_tower(c.points, c.depth, c.scale);
        }
    } catch (const constructions::GeometryError& e) {
        stderr_ << "error: " << e.what() << "\n" << e.evidence.dump() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        stderr_ << "error: " << e.what() << "\n";
        return kInputError;
    }
    if (spec.declared_r) t.declared_r = spec.declared_r;

    try {
        fs::create_directories(out);
        std::size_t files = 0;
        if (spec.geometry) {
            fs::create_directories(out / "meshes");
            fs::create_directories(out / "solids");
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            for (std::size_t k = 0; k < t.levels.size(); ++k) {
                for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
                    const std::string stem = "L" + std::to_string(k) + "_C" + std::to_string(i);
                    t.levels[k][i].mesh_ref = "solids/" + stem + ".tets.json";
                    slots.emplace_back(k, i);
                }
            }
            parallel_for(slots.size(), [&](std::size_t s) {
                const auto& c = t.levels[slots[s].first][slots[s].second];
                const std::string stem = "L" + std::to_string(slots[s].first) + "_C" + std::to_string(slots[s].second);
                std::ostringstream off;
                complex::write_off(off, *c.mesh);
                write_text(out / "meshes" / (stem + ".off"), off.str());
                write_text(out / c.mesh_ref, complex::to_tets_json(*c.mesh).dump() + "\n");
            });
            files = slots.size();
        }
        Json desc = tower::to_json(t);
        desc["instance"] = instance_name(spec);
        write_text(out / "tower.json", dump(desc));
        if (!certificates.empty()) write_text(out / "certificates.json", dump(certificates));

        Json summary;
        summary["descriptor"] = "tower.json";
        summary["instance"] = instance_name(spec);
        Json counts = Json::array();
        for (const auto& level : t.levels) counts.push_back(level.size());
        summary["components_per_level"] = counts;
        const auto ranks = t.level_ranks();
        summary["level_ranks"] = ranks ? Json(*ranks) : Json(nullptr);
        summary["mesh_files"] = files;
        summary["certificates"] = certificates.size();
        stdout_ << dump(summary);
        stderr_ << "generated " << instance_name(spec) << ": " << t.component_count() << " components, "
                << files << " meshes in " << out.string() << "\n";
    } catch (const std::exception& e) {
        stderr_ << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}

int cmd_homology(const fs::path& input, std::ostream& stdout_, std::ostream& stderr_) {
    try {
        if (input.extension() == ".off") {
            std::ifstream in(input);
            if (!in) throw tower::SchemaError("cannot open " + input.string());
            const auto b = complex::betti(complex::read_off(in));
            stdout_ << betti_json(b).dump() << "\n";
            stderr_ << "surface mesh: b = (" << b.b0 << ", " << b.b1 << ", " << b.b2 << ", " << b.b3 << ")\n";
            return kOk;
        }
        const auto j = tower::read_json_file(input);
        if (j.is_object() && j.value("format", std::string{}) == complex::kTetsFormat) {
            const auto b = complex::betti(complex::from_tets_json(j));
            stdout_ << betti_json(b).dump() << "\n";
            stderr_ << "solid mesh: b = (" << b.b0 << ", " << b.b1 << ", " << b.b2 << ", " << b.b3 << ")\n";
            return kOk;
        }
        tower::Tower t = tower::tower_from_json(j);
        tower::load_meshes(t, input.parent_path());
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t k = 0; k < t.levels.size(); ++k) {
            for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
                if (!t.levels[k][i].mesh) {
                    throw tower::SchemaError("level " + std::to_string(k) + " component " + std::to_string(i) +
                                             " has no mesh_ref");
                }
                slots.emplace_back(k, i);
            }
        }
        std::vector<complex::BettiVector> betti(slots.size());
        parallel_for(slots.size(), [&](std::size_t s) {
            betti[s] = complex::betti(*t.levels[slots[s].first][slots[s].second].mesh);
        });
        Json components = Json::array();
        Json totals = Json::array();
        Json ranks = Json::array();
        std::size_t s = 0;
        for (const auto& level : t.levels) {
            Json lj = Json::array();
            complex::BettiVector total;
            for (std::size_t i = 0; i < level.size(); ++i, ++s) {
                lj.push_back(betti_json(betti[s]));
                total += betti[s];
            }
            components.push_back(std::move(lj));
            totals.push_back(betti_json(total));
            ranks.push_back(total.b1);
        }
        Json out;
        out["components"] = components;
        out["level_totals"] = totals;
        out["level_ranks"] = ranks;
        stdout_ << dump(out);
        stderr_ << "descriptor: " << slots.size() << " components, level ranks " << ranks.dump() << "\n";
        return kOk;
    } catch (const std::exception& e) {
        stderr_ << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int cmd_analyze(const fs::path& descriptor, const AnalyzeFlags& flags, std::ostream& stdout_,
                std::ostream& stderr_) {
    analysis::AnalyzeOptions opts;
    tower::Tower t;
    try {
        const auto j = tower::read_json_file(descriptor);
        t = tower::tower_from_json(j);
        tower::load_meshes(t, descriptor.parent_path());
        opts.instance = j.contains("instance") && j["instance"].is_string() ? j["instance"].get<std::string>()
                                                                            : descriptor.filename().string();
        if (flags.rule) opts.rule = tower::rule_from_json(tower::read_json_file(*flags.rule));
    } catch (const std::exception& e) {
        stderr_ << "error: " << e.what() << "\n";
        return kInputError;
    }
    opts.declared_r = flags.declared_r;
    opts.complement_not_simply_connected = flags.complement_nontrivial;
    try {
        const auto rep = analysis::analyze(t, opts);
        stdout_ << dump(rep.json);
        stderr_ << rep.summary;
        return rep.inconsistent ? kInconsistent : kOk;
    } catch (const std::exception& e) {
        stderr_ << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int run(int argc, const char* const* argv, std::ostream& stdout_, std::ostream& stderr_) {
    CLI::App app{"pmtower: pm-neighbourhood towers, homology and r-number analysis"};
    app.require_subcommand(1);

    std::string spec, out_dir, hom_input, descriptor, rule;
    std::optional<std::size_t> budget, declared_r;
    bool complement = false;

    auto* gen = app.add_subcommand("generate", "build a tower from a spec and write its descriptor and meshes");
    gen->add_option("spec", spec, "spec JSON")->required();
    gen->add_option("-o,--out", out_dir, "output directory")->required();
    gen->add_option("--budget", budget, "cap on the total number of tetrahedra");

    auto* hom = app.add_subcommand("homology", "Z2 Betti numbers of a mesh or of every component of a descriptor");
    hom->add_option("input", hom_input, ".tets.json, .off or tower descriptor")->required();

    auto* ana = app.add_subcommand("analyze", "run the tower analyses and print the JSON report");
    ana->add_option("descriptor", descriptor, "tower descriptor JSON")->required();
    ana->add_option("--declared-r", declared_r, "declared r for (N3)");
    ana->add_flag("--complement-nontrivial", complement, "the complement is not simply connected (input fact)");
    ana->add_option("--rule", rule, "substitution rule JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        stdout_ << o.str();
        stderr_ << er.str();
        return code == 0 ? kOk : kInputError;
    }

    if (*gen) return cmd_generate(spec, out_dir, budget, stdout_, stderr_);
    if (*hom) return cmd_homology(hom_input, stdout_, stderr_);
    AnalyzeFlags flags;
    flags.declared_r = declared_r;
    flags.complement_nontrivial = complement;
    if (!rule.empty()) flags.rule = rule;
    return cmd_analyze(descriptor, flags, stdout_, stderr_);
}

}  // namespace pmtower::cli
