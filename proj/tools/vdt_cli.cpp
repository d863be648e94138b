// Command-line front end: scenario ingestion, pipeline orchestration and
// report emission. See README for the scenario schema.

#include "vdt/gauss.hpp"
#include "vdt/scenario.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace vdt;

namespace {

Scenario load_scenario(const std::string& ref) {
    const auto& ids = scenario_catalogue_ids();
    if (std::find(ids.begin(), ids.end(), ref) != ids.end()) return scenario_by_id(ref);
    std::ifstream in(ref);
    if (!in) throw std::runtime_error("cannot open scenario file: " + ref);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error("scenario JSON parse error in " + ref + ": " + e.what());
    }
    return scenario_from_json(j);
}

void apply_overrides(Scenario& s, unsigned long seed, bool seed_set, const std::string& grid,
                     double tol, bool tol_set) {
    if (seed_set) s.seed = seed;
    if (tol_set) s.smt_slack = tol;
    if (!grid.empty()) {
        double r0, r1;
        int count;
        if (std::sscanf(grid.c_str(), "%lf:%lf:%d", &r0, &r1, &count) != 3)
            throw std::runtime_error("--grid expects r0:r1:count");
        s.grid_r0 = r0;
        s.grid_r1 = r1;
        s.grid_count = count;
    }
}

int emit_reports(const RunResult& res, const std::string& outdir) {
    if (!outdir.empty()) {
        fs::create_directories(outdir);
        std::ofstream rj(fs::path(outdir) / (res.id + ".report.json"));
        rj << res.report.dump(2) << "\n";
        for (const auto& [stem, body] : res.csv) {
            std::ofstream cf(fs::path(outdir) / (stem + ".csv"));
            cf << body;
        }
    }
    for (const auto& o : res.outcomes)
        std::cout << res.id << " " << o.name << " " << o.status << " : " << o.summary << "\n";
    std::cout << res.id << " exit " << res.exit_code << "\n";
    return res.exit_code;
}

int run_with_checks(Scenario s, const std::vector<std::string>& only,
                    const std::string& outdir) {
    if (!only.empty()) s.checks = only;
    return emit_reports(run_scenario(s), outdir);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"value-distribution toolkit: Nevanlinna functionals, Nochka weights, "
                 "derived-curve contact machinery and Gauss-map bounds"};
    app.require_subcommand(1);

    std::string scenario_ref, outdir, grid;
    unsigned long seed = 1;
    double tol = 0.05;
    bool seed_set = false, tol_set = false;

    auto add_common = [&](CLI::App* cmd, bool needs_scenario = true) {
        if (needs_scenario)
            cmd->add_option("scenario", scenario_ref, "catalogue id or scenario JSON path")
                ->required();
        cmd->add_option("--out", outdir, "report output directory");
        cmd->add_option("--grid", grid, "radius grid override r0:r1:count");
        cmd->add_option("--seed", seed, "seed override")->each([&](const std::string&) {
            seed_set = true;
        });
        cmd->add_option("--tol", tol, "SMT tail slack override")->each([&](const std::string&) {
            tol_set = true;
        });
    };

    auto* c_run = app.add_subcommand("run", "run every check a scenario requests");
    add_common(c_run);
    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert function of the scenario variety");
    add_common(c_hilbert);
    int hilbert_d = 0;
    c_hilbert->add_option("--d", hilbert_d, "degree (default: the scenario lcm)");
    auto* c_nochka = app.add_subcommand("nochka", "position check and certified weights");
    add_common(c_nochka);
    auto* c_wronskian = app.add_subcommand("wronskian", "curve certificates");
    add_common(c_wronskian);
    auto* c_nevanlinna = app.add_subcommand("nevanlinna", "functionals along the grid (CSV)");
    add_common(c_nevanlinna);
    auto* c_smt = app.add_subcommand("smt", "second-main-theorem margin verification");
    add_common(c_smt);
    auto* c_metric = app.add_subcommand("metric-checks", "contact/curvature checks");
    add_common(c_metric);
    auto* c_gauss = app.add_subcommand("gauss", "minimal-surface checks");
    std::string surface_name;
    c_gauss->add_option("surface", surface_name, "catalogue surface or scenario ref")->required();
    c_gauss->add_option("--out", outdir, "report output directory");
    auto* c_cat = app.add_subcommand("catalogue", "list or emit built-in scenarios");
    std::string emit_dir;
    bool list_only = false;
    c_cat->add_option("--emit", emit_dir, "write each catalogue scenario as JSON");
    c_cat->add_flag("--list", list_only, "list catalogue ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_cat->parsed()) {
            if (!emit_dir.empty()) {
                fs::create_directories(emit_dir);
                for (const auto& id : scenario_catalogue_ids()) {
                    std::ofstream out(fs::path(emit_dir) / (id + ".json"));
                    out << scenario_to_json(scenario_by_id(id)).dump(2) << "\n";
                }
            }
            if (list_only || emit_dir.empty())
                for (const auto& id : scenario_catalogue_ids()) std::cout << id << "\n";
            return 0;
        }
        if (c_gauss->parsed()) {
            Scenario s;
            const auto& names = MinimalSurface::catalogue_names();
            if (std::find(names.begin(), names.end(), surface_name) != names.end()) {
                s.id = "gauss_" + surface_name;
                s.variety = VarietyPresentation::minimality_conic();
                s.surface = surface_name;
                s.hypersurfaces = {HomogeneousPolynomial::linear(
                    {GaussRat(rat(-3, 2)), GaussRat(rat(0), rat(5, 2)), GaussRat(2)})};
                s.N = 1;
                s.checks = {"gauss_quadric", "total_curvature"};
            } else {
                s = load_scenario(surface_name);
                s.checks = {"gauss_quadric", "total_curvature", "bound_identity",
                            "ramification", "ftc_criterion"};
            }
            return emit_reports(run_scenario(s), outdir);
        }

        Scenario s = load_scenario(scenario_ref);
        apply_overrides(s, seed, seed_set, grid, tol, tol_set);

        if (c_run->parsed()) return run_with_checks(s, {}, outdir);
        if (c_hilbert->parsed()) {
            auto cfg = PositionConfig::make(s.variety, s.hypersurfaces, s.N);
            int d = hilbert_d > 0 ? hilbert_d : cfg.d;
            std::cout << "H_V(" << d << ") = " << hilbert_function(s.variety, d) << "\n";
            return 0;
        }
        if (c_nochka->parsed()) return run_with_checks(s, {"position", "nochka"}, outdir);
        if (c_wronskian->parsed()) return run_with_checks(s, {"wronskian"}, outdir);
        if (c_nevanlinna->parsed())
            return run_with_checks(s, {"essential", "function_vs_curve", "log_derivative", "smt"},
                                   outdir);
        if (c_smt->parsed()) return run_with_checks(s, {"position", "smt"}, outdir);
        if (c_metric->parsed())
            return run_with_checks(s,
                                   {"position", "nochka", "divisor_inequality", "sum_to_product",
                                    "derived_norm", "schwarz", "curvature_calibration",
                                    "main_lemma"},
                                   outdir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
