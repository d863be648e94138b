#pragma once

#include "vdt/gauss.hpp"
#include "vdt/json_io.hpp"
#include "vdt/metric.hpp"
#include "vdt/nevanlinna.hpp"
#include "vdt/position.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vdt {

/// One catalogue entry: a variety, hypersurfaces, a curve or surface, grid
/// and sampling settings, and the list of checks to run.
struct Scenario {
    std::string id;
    unsigned long seed = 1;
    VarietyPresentation variety;
    std::vector<HomogeneousPolynomial> hypersurfaces;
    int N = 1;

    std::optional<CurveRep> curve;      // explicit curve...
    std::optional<std::string> surface; // ...or a catalogue surface name

    double grid_s = 1.0;
    double grid_r0 = 2.0;
    double grid_r1 = 400.0;
    int grid_count = 12;

    double sample_R = 2.0; // metric-check disk
    int sample_per_side = 13;
    double delta = 4.0;      // Theorem-3.2 style delta
    double ml_eta = 0.1;     // Main-Lemma eta_j (uniform)
    double ml_epsilon = 0.05;
    double smt_slack = 0.05; // tail tolerance for the SMT margin

    std::vector<std::string> checks;
    std::optional<int> expected_exit;
};

Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

struct CheckOutcome {
    std::string name;
    std::string status; // PASS | FAIL | VACUOUS | INCONCLUSIVE | SKIPPED
    std::string summary;
};

struct RunResult {
    std::string id;
    int exit_code = 0;
    std::vector<CheckOutcome> outcomes;
    Json report;                              // full JSON report
    std::map<std::string, std::string> csv;   // filename stem -> contents
};

/// Execute the requested checks in dependency order and assemble the report.
/// Exit code: 0 all PASS/VACUOUS/SKIPPED, 2 on any FAIL, 3 on
/// INCONCLUSIVE-only.
RunResult run_scenario(const Scenario& s);

const std::vector<std::string>& scenario_catalogue_ids();
Scenario scenario_by_id(const std::string& id);

/// Canonical check order (dependencies first); unknown names are rejected.
const std::vector<std::string>& known_checks();

} // namespace vdt
