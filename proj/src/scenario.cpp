#include "vdt/scenario.hpp"

#include "vdt/wronskian.hpp"
#include "vdt/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace vdt {

namespace {

const char* kStatusPass = "PASS";
const char* kStatusFail = "FAIL";
const char* kStatusVacuous = "VACUOUS";
const char* kStatusInconclusive = "INCONCLUSIVE";
const char* kStatusSkipped = "SKIPPED";

bool wants(const Scenario& s, const std::string& name) {
    return std::find(s.checks.begin(), s.checks.end(), name) != s.checks.end();
}

std::string csv_join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ",";
        out += cells[i];
    }
    out += "\n";
    return out;
}

} // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> order{
        "position",       "norm_comparability", "nochka",        "wronskian",
        "gauss_quadric",  "essential",          "function_vs_curve", "log_derivative",
        "smt",            "defect_sum",         "divisor_inequality", "sum_to_product",
        "derived_norm",   "schwarz",            "curvature_calibration", "main_lemma",
        "total_curvature", "bound_identity",    "ramification",  "ftc_criterion"};
    return order;
}

Json scenario_to_json(const Scenario& s) {
    Json j;
    j["id"] = s.id;
    j["seed"] = s.seed;
    j["variety"] = variety_to_json(s.variety);
    Json hs = Json::array();
    for (const auto& q : s.hypersurfaces) hs.push_back(poly_to_json(q));
    j["hypersurfaces"] = std::move(hs);
    j["N"] = s.N;
    if (s.curve) {
        Json c;
        Json comps = Json::array();
        for (const auto& f : s.curve->components) comps.push_back(exppoly_to_json(f));
        c["components"] = std::move(comps);
        c["region"] = region_to_json(s.curve->region);
        j["curve"] = std::move(c);
    }
    if (s.surface) j["surface"] = *s.surface;
    j["grid"] = {{"s", s.grid_s}, {"r0", s.grid_r0}, {"r1", s.grid_r1}, {"count", s.grid_count}};
    j["samples"] = {{"R", s.sample_R}, {"per_side", s.sample_per_side}};
    j["delta"] = s.delta;
    j["smt_slack"] = s.smt_slack;
    j["main_lemma"] = {{"eta", s.ml_eta}, {"epsilon", s.ml_epsilon}};
    j["checks"] = s.checks;
    if (s.expected_exit) j["expected_exit"] = *s.expected_exit;
    return j;
}

Scenario scenario_from_json(const Json& j) {
    Scenario s;
    s.id = j.at("id").get<std::string>();
    s.seed = j.value("seed", 1UL);
    s.variety = variety_from_json(j.at("variety"));
    for (const auto& q : j.at("hypersurfaces")) s.hypersurfaces.push_back(poly_from_json(q));
    s.N = j.at("N").get<int>();
    if (j.contains("curve")) {
        CurveRep F;
        for (const auto& c : j.at("curve").at("components"))
            F.components.push_back(exppoly_from_json(c));
        F.region = region_from_json(j.at("curve").at("region"));
        F.target = s.variety;
        s.curve = std::move(F);
    }
    if (j.contains("surface")) s.surface = j.at("surface").get<std::string>();
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        s.grid_s = g.value("s", 1.0);
        s.grid_r0 = g.value("r0", 2.0);
        s.grid_r1 = g.value("r1", 400.0);
        s.grid_count = g.value("count", 12);
    }
    if (j.contains("samples")) {
        s.sample_R = j.at("samples").value("R", 2.0);
        s.sample_per_side = j.at("samples").value("per_side", 13);
    }
    s.delta = j.value("delta", 4.0);
    s.smt_slack = j.value("smt_slack", 0.05);
    if (j.contains("main_lemma")) {
        s.ml_eta = j.at("main_lemma").value("eta", 0.1);
        s.ml_epsilon = j.at("main_lemma").value("epsilon", 0.05);
    }
    s.checks = j.at("checks").get<std::vector<std::string>>();
    for (const auto& c : s.checks)
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
            throw std::invalid_argument("scenario/checks: unknown check '" + c + "'");
    if (j.contains("expected_exit")) s.expected_exit = j.at("expected_exit").get<int>();
    return s;
}

namespace {

struct RunState {
    Scenario s;
    RunResult out;
    std::optional<PositionConfig> cfg;
    std::optional<NochkaWeights> weights;
    std::optional<QuotientBasis> basis;
    std::optional<CurveRep> curve; // explicit or the surface Gauss map
    std::optional<MinimalSurface> surf;
    std::optional<RadiusGrid> grid;

    void add(const std::string& name, const std::string& status, const std::string& summary,
             Json details = {}) {
        out.outcomes.push_back({name, status, summary});
        Json o;
        o["status"] = status;
        o["summary"] = summary;
        if (!details.is_null()) o["details"] = std::move(details);
        out.report["results"][name] = std::move(o);
    }
};

void ensure_cfg(RunState& st) {
    if (!st.cfg) st.cfg = PositionConfig::make(st.s.variety, st.s.hypersurfaces, st.s.N);
}

void ensure_basis(RunState& st) {
    ensure_cfg(st);
    if (!st.basis) st.basis.emplace(st.s.variety, st.cfg->d);
}

void ensure_curve(RunState& st) {
    if (st.curve) return;
    if (st.s.curve) {
        st.curve = *st.s.curve;
        return;
    }
    if (st.s.surface) {
        st.surf = MinimalSurface::by_name(*st.s.surface);
        st.curve = gauss_map(*st.surf, st.s.grid_s);
        return;
    }
    throw std::invalid_argument("scenario has neither a curve nor a surface");
}

void ensure_grid(RunState& st) {
    if (!st.grid)
        st.grid = RadiusGrid::geometric(st.s.grid_s, st.s.grid_r0, st.s.grid_r1, st.s.grid_count);
}

void run_position(RunState& st) {
    ensure_cfg(st);
    auto res = check_subgeneral_position(*st.cfg);
    Json d;
    d["d"] = st.cfg->d;
    d["original_degrees"] = st.cfg->original_degrees;
    d["subsets_checked"] = res.subsets_checked;
    if (!res.in_position) {
        Json w = Json::array();
        for (const auto& x : res.witness) {
            w.push_back({{"re", format_double(x.real())}, {"im", format_double(x.imag())}});
        }
        d["violating_subset"] = res.violating_subset;
        d["witness"] = std::move(w);
        st.add("position", kStatusFail, "subset with nonempty intersection on V", d);
        return;
    }
    st.add("position", kStatusPass,
           "all " + std::to_string(res.subsets_checked) + " (N+1)-subsets miss V", d);
}

void run_norm_comparability(RunState& st) {
    ensure_cfg(st);
    std::vector<int> R;
    for (int i = 0; i <= st.s.N && i < st.cfg->q; ++i) R.push_back(i);
    auto nc = norm_comparability(*st.cfg, R, 200, st.s.seed);
    Json d;
    d["alpha_hat"] = format_double(nc.alpha_hat);
    d["beta_hat"] = format_double(nc.beta_hat);
    d["samples"] = nc.samples;
    bool ok = nc.alpha_hat > 0.0 && std::isfinite(nc.beta_hat);
    st.add("norm_comparability", ok ? kStatusPass : kStatusFail,
           "alpha_hat=" + format_double(nc.alpha_hat) + " beta_hat=" + format_double(nc.beta_hat),
           d);
}

void run_nochka(RunState& st) {
    ensure_cfg(st);
    if (st.cfg->q <= 2 * st.cfg->N - st.cfg->k + 1) {
        st.add("nochka", kStatusSkipped, "q <= 2N-k+1: weights not defined for this family");
        return;
    }
    auto w = nochka_weights(*st.cfg);
    st.weights = w;
    Json d;
    Json omegas = Json::array();
    for (const auto& o : w.omegas) omegas.push_back(rat_to_json(o));
    d["omegas"] = std::move(omegas);
    d["omega_tilde"] = rat_to_json(w.omega_tilde);
    d["clauses"] = {{"i", w.certificate.clause_i},
                    {"ii", w.certificate.clause_ii},
                    {"iii", w.certificate.clause_iii},
                    {"iv", w.certificate.clause_iv}};
    d["subsets_checked"] = w.certificate.subsets_checked;
    bool ok = w.certificate.clause_i && w.certificate.clause_ii && w.certificate.clause_iii &&
              w.certificate.clause_iv;
    st.add("nochka", ok ? kStatusPass : kStatusFail,
           "omega_tilde = " + w.omega_tilde.get_str() + ", clauses i-iv certified", d);
}

void run_wronskian(RunState& st) {
    ensure_basis(st);
    ensure_curve(st);
    DerivedCurveSet D(*st.curve, *st.basis);
    Json d;
    d["M"] = st.basis->M();
    auto reduced = certify_reduced(*st.curve);
    d["reduced"] = reduced.reduced;
    d["on_target"] = st.curve->on_target();
    bool nd = D.nondegenerate();
    d["nondegenerate"] = nd;
    // Prop-2.1-style scaling spot check on the composed components
    bool scaling = wronskian_scaling_check(
        {D.composed()[0], D.composed()[std::min(1, st.basis->M())]}, ExpPoly::z());
    d["scaling_identity"] = scaling;
    bool ok = reduced.reduced && st.curve->on_target() && nd && scaling;
    st.add("wronskian", ok ? kStatusPass : kStatusFail,
           nd ? "curve certificates hold" : "degenerate over I_d(V)", d);
}

void run_gauss_quadric(RunState& st) {
    if (!st.s.surface) {
        st.add("gauss_quadric", kStatusSkipped, "no surface in scenario");
        return;
    }
    if (!st.surf) st.surf = MinimalSurface::by_name(*st.s.surface);
    bool ok = st.surf->minimality_quadric().is_zero();
    st.add("gauss_quadric", ok ? kStatusPass : kStatusFail,
           ok ? "sum of squared derivatives vanishes exactly" : "quadric residue nonzero");
}

void run_essential(RunState& st) {
    ensure_curve(st);
    ensure_grid(st);
    auto rep = essential_singularity_test(*st.curve, *st.grid);
    Json d;
    Json ratios = Json::array();
    for (double x : rep.ratios) ratios.push_back(format_double(x));
    d["ratios"] = std::move(ratios);
    d["tail_estimate"] = format_double(rep.tail_estimate);
    std::string verdict = rep.verdict == SingularityVerdict::Extends ? "EXTENDS"
                          : rep.verdict == SingularityVerdict::Essential ? "ESSENTIAL"
                                                                         : "INCONCLUSIVE";
    d["verdict"] = verdict;
    st.add("essential",
           rep.verdict == SingularityVerdict::Inconclusive ? kStatusInconclusive : kStatusPass,
           verdict, d);
}

void run_function_vs_curve(RunState& st) {
    ensure_curve(st);
    ensure_grid(st);
    if (st.curve->components.size() != 2) {
        st.add("function_vs_curve", kStatusSkipped, "needs a two-component curve");
        return;
    }
    auto rep = function_vs_curve_characteristic(st.curve->components[1],
                                                st.curve->components[0], *st.grid);
    Json d;
    d["drift_top_decade"] = format_double(rep.drift_top_decade);
    d["reduced_common_factor"] = rep.reduced_common_factor;
    std::string csv = csv_join({"r", "T_function", "T_curve", "difference"});
    for (std::size_t i = 0; i < rep.radii.size(); ++i)
        csv += csv_join({format_double(rep.radii[i]), format_double(rep.t_function[i]),
                         format_double(rep.t_curve[i]), format_double(rep.difference[i])});
    st.out.csv[st.s.id + ".function_vs_curve"] = csv;
    st.add("function_vs_curve", rep.bounded ? kStatusPass : kStatusFail,
           "top-decade drift " + format_double(rep.drift_top_decade), d);
}

void run_log_derivative(RunState& st) {
    ensure_curve(st);
    ensure_grid(st);
    auto rep = log_derivative_measurement(*st.curve, 1, *st.grid);
    bool ok = true;
    Json d = Json::array();
    for (const auto& fit : rep.fits) {
        ok = ok && fit.holdout_ok;
        d.push_back({{"component", fit.component},
                     {"c1", format_double(fit.c1)},
                     {"c2", format_double(fit.c2)},
                     {"c3", format_double(fit.c3)},
                     {"holdout_ok", fit.holdout_ok}});
    }
    st.add("log_derivative", ok ? kStatusPass : kStatusFail,
           "fitted bound holds on the holdout tail", Json{{"fits", d}});
}

void run_smt(RunState& st) {
    ensure_cfg(st);
    ensure_basis(st);
    ensure_curve(st);
    ensure_grid(st);
    auto rep = smt_verify(*st.curve, *st.cfg, *st.basis, *st.grid, st.s.smt_slack);
    Json d;
    if (rep.refused) {
        d["refusal"] = rep.refusal_reason;
        Json w = Json::array();
        for (const auto& c : rep.degeneracy_witness) w.push_back(gaussrat_to_json(c));
        d["degeneracy_witness"] = std::move(w);
        st.add("smt", kStatusFail, rep.refusal_reason, d);
        return;
    }
    d["coefficient"] = format_double(rep.coefficient);
    d["min_tail_margin_over_T"] = format_double(rep.min_tail_margin_over_T);
    d["eps_slack"] = format_double(rep.eps_slack);
    // CSV per the documented column layout
    std::vector<std::string> head{"r", "T_f"};
    for (int i = 0; i < st.cfg->q; ++i) head.push_back("N_" + std::to_string(i + 1));
    for (int i = 0; i < st.cfg->q; ++i) head.push_back("N_trunc_" + std::to_string(i + 1));
    head.insert(head.end(), {"LHS", "RHS", "margin", "margin_over_T"});
    std::string csv = csv_join(head);
    for (const auto& row : rep.rows) {
        std::vector<std::string> cells{format_double(row.r), format_double(row.T)};
        for (double v : row.N_full) cells.push_back(format_double(v));
        for (double v : row.N_trunc) cells.push_back(format_double(v));
        cells.push_back(format_double(row.lhs));
        cells.push_back(format_double(row.rhs));
        cells.push_back(format_double(row.margin));
        cells.push_back(format_double(row.margin_over_T));
        csv += csv_join(cells);
    }
    st.out.csv[st.s.id + ".smt"] = csv;
    st.add("smt", rep.pass ? kStatusPass : kStatusFail,
           "min tail margin/T = " + format_double(rep.min_tail_margin_over_T), d);
}

void run_defect_sum(RunState& st) {
    ensure_cfg(st);
    ensure_basis(st);
    ensure_curve(st);
    ensure_grid(st);
    auto rep = defect_sum_check(*st.curve, *st.cfg, *st.basis, *st.grid);
    Json d;
    d["note"] = rep.note;
    if (!rep.applicable) {
        st.add("defect_sum", kStatusSkipped, rep.note, d);
        return;
    }
    Json defs = Json::array();
    for (double x : rep.defects) defs.push_back(format_double(x));
    d["defects"] = std::move(defs);
    d["sum"] = format_double(rep.sum);
    d["bound"] = format_double(rep.bound);
    st.add("defect_sum", rep.pass ? kStatusPass : kStatusFail,
           "sum " + format_double(rep.sum) + " vs bound " + format_double(rep.bound), d);
}

void run_divisor_inequality(RunState& st) {
    ensure_cfg(st);
    ensure_basis(st);
    ensure_curve(st);
    if (!st.weights) {
        st.add("divisor_inequality", kStatusSkipped, "requires certified weights (run nochka)");
        return;
    }
    auto rep = divisor_inequality_check(*st.curve, *st.cfg, *st.weights, *st.basis);
    Json d;
    d["note"] = rep.note;
    if (!rep.applicable) {
        st.add("divisor_inequality", kStatusSkipped, rep.note, d);
        return;
    }
    std::string csv = csv_join({"z_re", "z_im", "ord_W", "lhs_num", "lhs_den", "verdict"});
    for (const auto& row : rep.rows)
        csv += csv_join({format_double(row.representative_root.real()),
                         format_double(row.representative_root.imag()),
                         std::to_string(row.ord_wronskian), row.lhs.get_num().get_str(),
                         row.lhs.get_den().get_str(), row.ok ? "PASS" : "FAIL"});
    st.out.csv[st.s.id + ".divisor_inequality"] = csv;
    d["zero_classes"] = static_cast<int>(rep.rows.size());
    if (rep.rows.empty()) {
        st.add("divisor_inequality", kStatusVacuous, "no zeros of prod Q_j(F)", d);
        return;
    }
    st.add("divisor_inequality", rep.pass ? kStatusPass : kStatusFail,
           std::to_string(rep.rows.size()) + " zero classes checked exactly", d);
}

std::vector<CDouble> metric_samples(RunState& st, const DerivedCurveSet& D) {
    // exclude contact-degenerate points: any phi_{V,0}(Q_j) below threshold
    std::vector<InteriorProduct> ips;
    for (const auto& Q : st.cfg->lifted)
        ips.push_back(interior_product_against(D, 0, Q));
    return disk_samples(st.s.sample_R, st.s.sample_per_side, [&](const CDouble& z) {
        for (const auto& ip : ips) {
            auto c = contact_function(D, 0, ip, z);
            if (c.degenerate || c.value < 0.02) return true;
        }
        return false;
    });
}

void run_sum_to_product(RunState& st) {
    ensure_cfg(st);
    ensure_basis(st);
    ensure_curve(st);
    if (!st.weights) {
        st.add("sum_to_product", kStatusSkipped, "requires certified weights (run nochka)");
        return;
    }
    DerivedCurveSet D(*st.curve, *st.basis);
    if (!D.nondegenerate()) {
        st.add("sum_to_product", kStatusFail, "degenerate curve");
        return;
    }
    std::vector<std::vector<GaussRat>> coords;
    for (const auto& Q : st.cfg->lifted) coords.push_back(st.basis->reduce(Q));
    auto samples = metric_samples(st, D);
    Json d = Json::array();
    bool ok = true;
    for (int p = 0; p <= D.M() - 1; ++p) {
        auto res = sum_to_product_check(D, coords, st.weights->omegas, st.s.delta, p, samples);
        ok = ok && res.pass;
        d.push_back({{"p", p},
                     {"C_hat", format_double(res.C_hat)},
                     {"samples_used", res.samples_used},
                     {"samples_excluded", res.samples_excluded}});
    }
    st.add("sum_to_product", ok ? kStatusPass : kStatusFail,
           "positive C_hat at every level", Json{{"levels", d}});
}

void run_derived_norm(RunState& st) {
    ensure_cfg(st);
    ensure_basis(st);
    ensure_curve(st);
    DerivedCurveSet D(*st.curve, *st.basis);
    if (!D.nondegenerate()) {
        st.add("derived_norm", kStatusFail, "degenerate curve");
        return;
    }
    auto samples = metric_samples(st, D);
    auto rep = derived_norm_inequality_check(D, samples, 1e-3);
    std::string csv = csv_join({"z_re", "z_im", "lhs", "rhs", "margin", "verdict"});
    for (const auto& row : rep.rows)
        csv += csv_join({format_double(row.z.real()), format_double(row.z.imag()),
                         format_double(row.lhs), format_double(row.rhs),
                         format_double(row.margin), row.ok ? "PASS" : "FAIL"});
    st.out.csv[st.s.id + ".derived_norm"] = csv;
    st.add("derived_norm", rep.pass ? kStatusPass : kStatusFail,
           std::to_string(rep.rows.size()) + " samples checked");
}

void run_schwarz(RunState& st) {
    // calibration on the extremal function plus the zero function
    double R = st.s.sample_R;
    auto samples = disk_samples(R, st.s.sample_per_side);
    auto zero = schwarz_bound_check([](const CDouble&) { return 0.0; }, R, samples);
    auto extremal = schwarz_bound_check(
        [R](const CDouble& z) { return 2.0 * R / (R * R - std::norm(z)); }, R, samples);
    bool ok = zero.pass && extremal.pass && extremal.worst_ratio > 0.999;
    st.add("schwarz", ok ? kStatusPass : kStatusFail,
           "extremal ratio " + format_double(extremal.worst_ratio));
}

void run_curvature_calibration(RunState& st) {
    double R = 1.0;
    auto log_poincare = [R](const CDouble& z) {
        return std::log(2.0 * R) - std::log(R * R - std::norm(z));
    };
    auto grid = disk_samples(0.6 * R, 12);
    auto cal = curvature_negativity_check(log_poincare, grid, 1e-3, 1.0);
    auto flat = curvature_negativity_check([](const CDouble&) { return std::log(2.0); }, grid,
                                           1e-3, 1.0);
    Json d;
    d["poincare_pass_fraction"] = format_double(cal.pass_fraction);
    d["flat_pass_fraction"] = format_double(flat.pass_fraction);
    bool ok = cal.pass && !cal.inconclusive && !flat.pass;
    st.add("curvature_calibration", ok ? kStatusPass : kStatusFail,
           "poincare passes, flat control fails", d);
}

void run_main_lemma(RunState& st) {
    ensure_cfg(st);
    ensure_basis(st);
    ensure_curve(st);
    if (!st.weights) {
        st.add("main_lemma", kStatusSkipped, "requires certified weights (run nochka)");
        return;
    }
    if (st.curve->region.kind != Region::Kind::Disk) {
        st.add("main_lemma", kStatusSkipped, "needs a disk-region curve");
        return;
    }
    double R = st.curve->region.b;
    DerivedCurveSet D(*st.curve, *st.basis);
    if (!D.nondegenerate()) {
        st.add("main_lemma", kStatusFail, "degenerate curve");
        return;
    }
    MainLemmaParams params;
    params.M = st.basis->M();
    params.d = st.cfg->d;
    params.omegas = st.weights->omegas;
    params.eta_j.assign(st.cfg->q, st.s.ml_eta);
    params.epsilon = st.s.ml_epsilon;
    auto der = main_lemma_rho(params);
    std::vector<std::function<double(const CDouble&)>> logk(
        st.cfg->q, [](const CDouble&) { return 0.0; });
    auto samples = disk_samples(R, st.s.sample_per_side, nullptr, 0.02);
    auto rep = main_lemma_eta(D, *st.cfg, params, logk, R, samples);
    Json d;
    d["gamma"] = format_double(params.gamma());
    d["h"] = format_double(der.h);
    d["rho"] = format_double(der.rho);
    d["rho_star"] = format_double(der.rho_star);
    d["rho_in_range"] = der.rho_in_range;
    if (rep.refused) {
        d["refusal"] = rep.refusal;
        st.add("main_lemma", kStatusFail, rep.refusal, d);
        return;
    }
    d["C_fit"] = format_double(rep.C_fit);
    d["bound_pass"] = rep.bound_pass;
    bool finite = true;
    for (double le : rep.log_eta) finite = finite && std::isfinite(le);
    bool ok = rep.bound_pass && finite && der.rho_in_range;
    st.add("main_lemma", ok ? kStatusPass : kStatusFail,
           "eta finite, Schwarz-shaped bound holds with fitted C", d);
}

void run_total_curvature(RunState& st) {
    if (!st.s.surface) {
        st.add("total_curvature", kStatusSkipped, "no surface in scenario");
        return;
    }
    if (!st.surf) st.surf = MinimalSurface::by_name(*st.s.surface);
    auto rep = total_curvature(*st.surf);
    Json d;
    d["value"] = format_double(rep.value);
    d["inferred_l"] = format_double(rep.inferred_l);
    d["finite"] = rep.verdict == TotalCurvatureReport::Verdict::Finite;
    std::string summary;
    bool ok = true;
    if (st.surf->known_total_curvature) {
        ok = rep.verdict == TotalCurvatureReport::Verdict::Finite &&
             std::abs(rep.value - *st.surf->known_total_curvature) < 1e-5;
        summary = "integral " + format_double(rep.value) + " vs known " +
                  format_double(*st.surf->known_total_curvature);
    } else {
        ok = rep.verdict == TotalCurvatureReport::Verdict::InfiniteOrUnknown;
        summary = "sweep did not converge (expected infinite)";
    }
    st.add("total_curvature", ok ? kStatusPass : kStatusFail, summary, d);
}

void run_bound_identity(RunState& st) {
    ensure_cfg(st);
    ensure_basis(st);
    auto rep = bound_evaluator(st.cfg->N, st.cfg->k, st.cfg->d, st.basis->M(), st.cfg->q);
    Json d;
    d["B1"] = rat_to_json(rep.B1);
    d["B2"] = rat_to_json(rep.B2);
    d["forms_agree"] = rep.forms_agree;
    d["q"] = st.cfg->q;
    d["q_exceeds_B1"] = Rat(st.cfg->q) > rep.B1;
    st.add("bound_identity", rep.forms_agree && rep.B1 <= rep.B2 ? kStatusPass : kStatusFail,
           "B1 = " + rep.B1.get_str() + ", B2 = " + rep.B2.get_str(), d);
}

void run_ramification(RunState& st) {
    ensure_cfg(st);
    ensure_basis(st);
    ensure_curve(st);
    double inner = st.s.grid_s;
    double outer = st.s.grid_r1;
    Json d = Json::array();
    bool ok = true;
    for (const auto& Q : st.cfg->originals) {
        // verify the smallest order as the ramification witness
        auto probe = ramification_defect_witness(*st.curve, Q, st.basis->M(), 1, inner, outer);
        int m_j = probe.min_order == 0 ? 0 : probe.min_order;
        auto w = m_j > 0
                     ? ramification_defect_witness(*st.curve, Q, st.basis->M(), m_j, inner, outer)
                     : probe;
        ok = ok && w.verified;
        d.push_back({{"min_order", w.min_order},
                     {"lower_bound", format_double(w.lower_bound)},
                     {"verified", w.verified},
                     {"exact", w.exact}});
    }
    st.add("ramification", ok ? kStatusPass : kStatusFail, "witness bounds certified",
           Json{{"hypersurfaces", d}});
}

void run_ftc_criterion(RunState& st) {
    if (!st.s.surface) {
        st.add("ftc_criterion", kStatusSkipped, "no surface in scenario");
        return;
    }
    ensure_cfg(st);
    ensure_basis(st);
    if (!st.surf) st.surf = MinimalSurface::by_name(*st.s.surface);
    std::vector<double> sweep{0.25 * st.s.grid_r1, 0.5 * st.s.grid_r1, st.s.grid_r1};
    auto rep = finite_total_curvature_criterion(*st.surf, *st.cfg, *st.basis, sweep);
    Json d;
    d["note"] = rep.note;
    if (!rep.applicable) {
        st.add("ftc_criterion", kStatusVacuous, rep.note, d);
        return;
    }
    d["counts"] = rep.counts;
    d["stabilized"] = rep.counts_stabilized;
    d["bound_B1"] = rat_to_json(rep.bound);
    d["q_exceeds_bound"] = rep.q_exceeds_bound;
    d["consistent"] = rep.consistent;
    if (!rep.counts_stabilized) {
        st.add("ftc_criterion", kStatusInconclusive, "sweep counts did not stabilize", d);
        return;
    }
    st.add("ftc_criterion", rep.consistent ? kStatusPass : kStatusFail,
           "implication table consistent", d);
}

} // namespace

RunResult run_scenario(const Scenario& s) {
    RunState st;
    st.s = s;
    st.out.id = s.id;
    st.out.report["id"] = s.id;
    st.out.report["seed"] = s.seed;
    st.out.report["config"] = scenario_to_json(s);
    st.out.report["results"] = Json::object();

    for (const auto& name : known_checks()) {
        if (!wants(s, name)) continue;
        try {
            if (name == "position") run_position(st);
            else if (name == "norm_comparability") run_norm_comparability(st);
            else if (name == "nochka") run_nochka(st);
            else if (name == "wronskian") run_wronskian(st);
            else if (name == "gauss_quadric") run_gauss_quadric(st);
            else if (name == "essential") run_essential(st);
            else if (name == "function_vs_curve") run_function_vs_curve(st);
            else if (name == "log_derivative") run_log_derivative(st);
            else if (name == "smt") run_smt(st);
            else if (name == "defect_sum") run_defect_sum(st);
            else if (name == "divisor_inequality") run_divisor_inequality(st);
            else if (name == "sum_to_product") run_sum_to_product(st);
            else if (name == "derived_norm") run_derived_norm(st);
            else if (name == "schwarz") run_schwarz(st);
            else if (name == "curvature_calibration") run_curvature_calibration(st);
            else if (name == "main_lemma") run_main_lemma(st);
            else if (name == "total_curvature") run_total_curvature(st);
            else if (name == "bound_identity") run_bound_identity(st);
            else if (name == "ramification") run_ramification(st);
            else if (name == "ftc_criterion") run_ftc_criterion(st);
        } catch (const std::exception& e) {
            st.add(name, kStatusFail, std::string("error: ") + e.what());
        }
    }

    int code = 0;
    for (const auto& o : st.out.outcomes) {
        if (o.status == kStatusFail) code = 2;
        if (o.status == kStatusInconclusive && code == 0) code = 3;
    }
    st.out.exit_code = code;
    st.out.report["exit_code"] = code;
    return st.out;
}

} // namespace vdt
