#include "vdt/scenario.hpp"

#include <stdexcept>

namespace vdt {

namespace {

ExpPoly one() { return ExpPoly::constant(GaussRat(1)); }
ExpPoly zvar() { return ExpPoly::z(); }
ExpPoly ez() { return ExpPoly::exp(GaussRat(1)); }

HomogeneousPolynomial line_p1(long c1, long c0) {
    return HomogeneousPolynomial::linear({GaussRat(c0), GaussRat(c1)});
}

// (x1 - a x0)(x1 - b x0): a degree-2 hypersurface on P^1
HomogeneousPolynomial quadratic_p1(long a, long b) {
    return line_p1(1, -a) * line_p1(1, -b);
}

// tangent line to the conic (1 : t : t^2) at t = a
HomogeneousPolynomial tangent_conic(long a) {
    return HomogeneousPolynomial::linear({GaussRat(Rat(a * a)), GaussRat(Rat(-2 * a)), GaussRat(1)});
}

// tangent line to the minimality conic at parameter w (self-dual quadric)
HomogeneousPolynomial tangent_minimality(long w) {
    Rat w2(w * w);
    return HomogeneousPolynomial::linear({GaussRat((1 - w2) / 2), GaussRat(Rat(0), (1 + w2) / 2),
                                          GaussRat(Rat(w))});
}

CurveRep rational_p1_curve() {
    return {{one(), zvar()}, Region::punctured_disk(1.0), VarietyPresentation::projective_space(1)};
}
CurveRep exp_p1_curve() {
    return {{one(), ez()}, Region::punctured_disk(1.0), VarietyPresentation::projective_space(1)};
}
CurveRep conic_curve(double s = 1.0) {
    return {{one(), zvar(), zvar() * zvar()}, Region::punctured_disk(s),
            VarietyPresentation::conic_p2()};
}

Scenario p1_exp_two_lines() {
    Scenario s;
    s.id = "p1_exp_two_lines";
    s.variety = VarietyPresentation::projective_space(1);
    s.hypersurfaces = {HomogeneousPolynomial::variable(1, 0),
                       HomogeneousPolynomial::variable(1, 1)};
    s.N = 1;
    s.curve = exp_p1_curve();
    s.grid_r0 = 2.0;
    s.grid_r1 = 400.0;
    s.grid_count = 12;
    s.checks = {"position", "wronskian", "essential", "smt", "defect_sum"};
    s.expected_exit = 0;
    return s;
}

Scenario p1_rational_three_points() {
    Scenario s;
    s.id = "p1_rational_three_points";
    s.variety = VarietyPresentation::projective_space(1);
    s.hypersurfaces = {HomogeneousPolynomial::variable(1, 0), line_p1(1, -2), line_p1(1, 2)};
    s.N = 1;
    s.curve = rational_p1_curve();
    s.grid_r0 = 3.0;
    s.grid_r1 = 500.0;
    s.grid_count = 12;
    s.checks = {"position", "nochka", "wronskian", "essential", "function_vs_curve",
                "log_derivative", "smt", "defect_sum"};
    s.expected_exit = 0;
    return s;
}

Scenario p1_exp_quadratics_d2() {
    Scenario s;
    s.id = "p1_exp_quadratics_d2";
    s.variety = VarietyPresentation::projective_space(1);
    s.hypersurfaces = {quadratic_p1(2, 3), quadratic_p1(-2, -3), quadratic_p1(4, 5),
                       quadratic_p1(-4, -5), quadratic_p1(6, 7)};
    s.N = 1;
    s.curve = exp_p1_curve();
    s.grid_r0 = 2.0;
    s.grid_r1 = 60.0;
    s.grid_count = 10;
    s.checks = {"position", "nochka", "wronskian", "essential", "smt", "defect_sum"};
    s.expected_exit = 0;
    return s;
}

Scenario p1_rational_quadratics_d2() {
    Scenario s;
    s.id = "p1_rational_quadratics_d2";
    s.variety = VarietyPresentation::projective_space(1);
    s.hypersurfaces = {quadratic_p1(2, 3), quadratic_p1(-2, -3), quadratic_p1(4, 5),
                       quadratic_p1(-4, -5), quadratic_p1(6, 7)};
    s.N = 1;
    s.curve = rational_p1_curve();
    s.grid_r0 = 3.0;
    s.grid_r1 = 500.0;
    s.grid_count = 12;
    s.checks = {"position", "nochka", "wronskian", "smt", "defect_sum", "norm_comparability"};
    s.expected_exit = 0;
    return s;
}

Scenario conic_seven_tangents() {
    Scenario s;
    s.id = "conic_seven_tangents";
    s.variety = VarietyPresentation::conic_p2();
    for (long a : {2, 3, -2, -3, 4, -4, 5}) s.hypersurfaces.push_back(tangent_conic(a));
    s.N = 2;
    s.curve = conic_curve();
    s.grid_r0 = 6.0;
    s.grid_r1 = 600.0;
    s.grid_count = 12;
    s.checks = {"position", "nochka", "wronskian", "smt", "divisor_inequality",
                "sum_to_product", "derived_norm"};
    s.sample_R = 1.5;
    s.expected_exit = 0;
    return s;
}

Scenario conic_deg2_mixed() {
    Scenario s;
    s.id = "conic_deg2_mixed";
    s.variety = VarietyPresentation::conic_p2();
    HomogeneousPolynomial qq(2, 2); // x1^2 + x0 x2, nonvanishing on the affine conic chart
    qq.set(MultiIndex{{0, 2, 0}}, GaussRat(1));
    qq.set(MultiIndex{{1, 0, 1}}, GaussRat(1));
    s.hypersurfaces.push_back(qq);
    for (long a : {2, 3, -2, -3, 4, -4, 5, -5, 6, -6}) s.hypersurfaces.push_back(tangent_conic(a));
    s.N = 2;
    s.curve = conic_curve();
    s.grid_r0 = 7.0;
    s.grid_r1 = 700.0;
    s.grid_count = 12;
    s.checks = {"position", "nochka", "wronskian", "smt"};
    s.expected_exit = 0;
    return s;
}

Scenario p2_enneper_four_planes() {
    Scenario s;
    s.id = "p2_enneper_four_planes";
    s.variety = VarietyPresentation::projective_space(2);
    s.hypersurfaces = {HomogeneousPolynomial::variable(2, 0),
                       HomogeneousPolynomial::variable(2, 1),
                       HomogeneousPolynomial::variable(2, 2),
                       HomogeneousPolynomial::linear({GaussRat(1), GaussRat(2), GaussRat(1)})};
    s.N = 2;
    // the Enneper Gauss map as an explicit curve avoiding |zero| == s
    auto surf = MinimalSurface::enneper();
    CurveRep F;
    F.components = surf.dz;
    F.region = Region::punctured_disk(0.9);
    F.target = s.variety;
    s.curve = F;
    s.grid_s = 0.9;
    s.grid_r0 = 2.0;
    s.grid_r1 = 400.0;
    s.grid_count = 12;
    s.checks = {"position", "nochka", "wronskian", "essential", "smt", "defect_sum"};
    s.expected_exit = 0;
    return s;
}

Scenario degenerate_conic_curve() {
    Scenario s;
    s.id = "degenerate_conic_curve";
    s.variety = VarietyPresentation::projective_space(2);
    // squares of five lines in general position: every triple independent
    for (int i = 0; i <= 2; ++i)
        s.hypersurfaces.push_back(HomogeneousPolynomial::variable(2, i, 2));
    auto l4 = HomogeneousPolynomial::linear({GaussRat(1), GaussRat(1), GaussRat(1)});
    auto l5 = HomogeneousPolynomial::linear({GaussRat(1), GaussRat(2), GaussRat(4)});
    s.hypersurfaces.push_back(l4 * l4);
    s.hypersurfaces.push_back(l5 * l5);
    s.N = 2;
    CurveRep F = conic_curve();
    F.target = s.variety; // P^2: the curve sits on a conic, degenerate over I_2
    s.curve = F;
    s.grid_r0 = 2.0;
    s.grid_r1 = 50.0;
    s.grid_count = 8;
    s.checks = {"position", "smt"};
    s.expected_exit = 2; // negative control: refusal with Wronskian witness
    return s;
}

Scenario enneper_minimality_conic() {
    Scenario s;
    s.id = "enneper_minimality_conic";
    s.variety = VarietyPresentation::minimality_conic();
    for (long w : {2, 3, -2, -3, 4, -4, 5}) s.hypersurfaces.push_back(tangent_minimality(w));
    s.N = 2;
    s.surface = "enneper";
    s.grid_s = 1.1;
    s.grid_r0 = 6.0;
    s.grid_r1 = 600.0;
    s.grid_count = 12;
    s.checks = {"gauss_quadric", "position", "nochka", "wronskian", "smt", "total_curvature",
                "bound_identity", "ramification", "ftc_criterion"};
    s.expected_exit = 0;
    return s;
}

Scenario catenoid_minimality_conic() {
    Scenario s;
    s.id = "catenoid_minimality_conic";
    s.variety = VarietyPresentation::minimality_conic();
    for (long w : {2, 3, -2}) s.hypersurfaces.push_back(tangent_minimality(w));
    s.N = 2;
    s.surface = "catenoid";
    s.grid_s = 1.0;
    s.grid_r0 = 4.0;
    s.grid_r1 = 40.0;
    s.grid_count = 8;
    s.checks = {"gauss_quadric", "position", "wronskian", "total_curvature", "bound_identity",
                "ftc_criterion"};
    s.expected_exit = 0;
    return s;
}

Scenario metric_main_lemma_disk() {
    Scenario s;
    s.id = "metric_main_lemma_disk";
    s.variety = VarietyPresentation::projective_space(1);
    s.hypersurfaces = {HomogeneousPolynomial::variable(1, 0),
                       HomogeneousPolynomial::variable(1, 1), line_p1(1, -3)};
    s.N = 1;
    CurveRep F{{one(), ez()}, Region::disk(1.0), s.variety};
    s.curve = F;
    s.sample_R = 1.0;
    s.sample_per_side = 17;
    s.checks = {"position", "nochka", "wronskian", "schwarz", "curvature_calibration",
                "main_lemma"};
    s.expected_exit = 0;
    return s;
}

} // namespace

const std::vector<std::string>& scenario_catalogue_ids() {
    static const std::vector<std::string> ids{
        "p1_exp_two_lines",      "p1_rational_three_points", "p1_exp_quadratics_d2",
        "p1_rational_quadratics_d2", "conic_seven_tangents", "conic_deg2_mixed",
        "p2_enneper_four_planes", "degenerate_conic_curve",  "enneper_minimality_conic",
        "catenoid_minimality_conic", "metric_main_lemma_disk"};
    return ids;
}

Scenario scenario_by_id(const std::string& id) {
    if (id == "p1_exp_two_lines") return p1_exp_two_lines();
    if (id == "p1_rational_three_points") return p1_rational_three_points();
    if (id == "p1_exp_quadratics_d2") return p1_exp_quadratics_d2();
    if (id == "p1_rational_quadratics_d2") return p1_rational_quadratics_d2();
    if (id == "conic_seven_tangents") return conic_seven_tangents();
    if (id == "conic_deg2_mixed") return conic_deg2_mixed();
    if (id == "p2_enneper_four_planes") return p2_enneper_four_planes();
    if (id == "degenerate_conic_curve") return degenerate_conic_curve();
    if (id == "enneper_minimality_conic") return enneper_minimality_conic();
    if (id == "catenoid_minimality_conic") return catenoid_minimality_conic();
    if (id == "metric_main_lemma_disk") return metric_main_lemma_disk();
    throw std::invalid_argument("unknown scenario id: " + id);
}

} // namespace vdt
