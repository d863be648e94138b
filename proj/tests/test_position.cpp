#include "vdt/position.hpp"

#include "vdt/lp.hpp"
#include "vdt/univariate.hpp"

#include "doctest.h"

#include <cmath>

using namespace vdt;

namespace {

// tangent line to the conic (1 : t : t^2) at parameter a: a^2 x0 - 2a x1 + x2
HomogeneousPolynomial tangent_line(long a_num, long a_den = 1) {
    Rat a = rat(a_num, a_den);
    return HomogeneousPolynomial::linear({GaussRat(a * a), GaussRat(-2 * a), GaussRat(1)});
}

} // namespace

TEST_CASE("exact LP sanity") {
    LinearProgram lp;
    lp.A = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    lp.b = {Rat(2), Rat(3), Rat(4)};
    lp.c = {Rat(1), Rat(1)};
    auto sol = solve_lp(lp);
    REQUIRE(sol.feasible);
    CHECK(sol.objective == Rat(4));

    // infeasible: x >= 5 (as -x <= -5) with x <= 1
    LinearProgram bad;
    bad.A = {{Rat(-1)}, {Rat(1)}};
    bad.b = {Rat(-5), Rat(1)};
    bad.c = {Rat(0)};
    CHECK(!solve_lp(bad).feasible);
}

TEST_CASE("coordinate hyperplanes are in n-subgeneral position on P^n") {
    auto P2 = VarietyPresentation::projective_space(2);
    std::vector<HomogeneousPolynomial> planes;
    for (int i = 0; i <= 2; ++i) planes.push_back(HomogeneousPolynomial::variable(2, i));
    auto cfg = PositionConfig::make(P2, planes, 2);
    auto res = check_subgeneral_position(cfg);
    CHECK(res.in_position);
    CHECK(res.subsets_checked == 1);
}

TEST_CASE("hyperplanes through a shared point violate position with witness") {
    auto P2 = VarietyPresentation::projective_space(2);
    // all three vanish at (0:0:1)
    std::vector<HomogeneousPolynomial> planes{
        HomogeneousPolynomial::variable(2, 0), HomogeneousPolynomial::variable(2, 1),
        HomogeneousPolynomial::linear({GaussRat(1), GaussRat(1), GaussRat(0)})};
    auto cfg = PositionConfig::make(P2, planes, 2);
    auto res = check_subgeneral_position(cfg);
    REQUIRE(!res.in_position);
    REQUIRE(res.witness.size() == 3);
    for (const auto& Q : planes) CHECK(std::abs(Q.eval(res.witness)) < 1e-9);
}

TEST_CASE("conic tangent lines: pullbacks and position") {
    auto V = VarietyPresentation::conic_p2();
    auto L = tangent_line(2);
    // gcd oracle: the pullback through (1, t, t^2) is (t - 2)^2
    auto pulled = L.substitute(*V.parametrization);
    GPoly expect{GaussRat(4), GaussRat(-4), GaussRat(1)}; // (t-2)^2
    std::vector<GaussRat> got(3, GaussRat(0));
    for (const auto& [m, c] : pulled.terms()) got[m.exponents[1]] = c;
    CHECK(GPoly(got) == expect);

    std::vector<HomogeneousPolynomial> tangents{tangent_line(1), tangent_line(2),
                                                tangent_line(3)};
    auto cfg = PositionConfig::make(V, tangents, 2);
    CHECK(cfg.d == 1);
    CHECK(cfg.k == 1);
    auto res = check_subgeneral_position(cfg);
    CHECK(res.in_position);

    // adding the tangent at a shared parameter twice breaks position at N=1
    std::vector<HomogeneousPolynomial> dup{tangent_line(2), tangent_line(2)};
    auto cfg2 = PositionConfig::make(V, dup, 1);
    auto res2 = check_subgeneral_position(cfg2);
    REQUIRE(!res2.in_position);
    // witness is the tangency point (1 : 2 : 4) up to scale, on V
    CHECK(std::abs(V.generators[0].eval(res2.witness)) < 1e-8);
}

TEST_CASE("nochka weights: general position returns all ones exactly") {
    auto P2 = VarietyPresentation::projective_space(2);
    std::vector<HomogeneousPolynomial> planes{
        HomogeneousPolynomial::variable(2, 0), HomogeneousPolynomial::variable(2, 1),
        HomogeneousPolynomial::variable(2, 2),
        HomogeneousPolynomial::linear({GaussRat(1), GaussRat(1), GaussRat(1)})};
    auto cfg = PositionConfig::make(P2, planes, 2); // N = k = 2, q = 4 > 2N-k+1 = 3
    auto w = nochka_weights(cfg);
    CHECK(w.omega_tilde == Rat(1));
    for (const auto& o : w.omegas) CHECK(o == Rat(1));
    CHECK(w.certificate.clause_i);
    CHECK(w.certificate.clause_ii);
    CHECK(w.certificate.clause_iii);
    CHECK(w.certificate.clause_iv);
    CHECK(w.certificate.subsets_checked == 4); // C(4,3)
}

TEST_CASE("nochka weights: k=1, N=2 forces omega_tilde = 1/2") {
    auto V = VarietyPresentation::conic_p2();
    std::vector<HomogeneousPolynomial> tangents;
    for (long a : {1, 2, 3, -1, -2, 5}) tangents.push_back(tangent_line(a));
    auto cfg = PositionConfig::make(V, tangents, 2); // q = 6 > 2N-k+1 = 4
    REQUIRE(check_subgeneral_position(cfg).in_position);
    auto w = nochka_weights(cfg);
    CHECK(w.omega_tilde == rat(1, 2)); // bracket [(k+1)/(2N-k+1), k/N] degenerates
    Rat sum(0);
    for (const auto& o : w.omegas) sum += o;
    CHECK(sum == Rat(3)); // (q-4)/2 + 2
    CHECK(w.certificate.clause_iv);

    // q too small relative to 2N-k+1 is refused
    std::vector<HomogeneousPolynomial> few{tangent_line(1), tangent_line(2), tangent_line(3),
                                           tangent_line(4)};
    auto cfg_few = PositionConfig::make(V, few, 2);
    CHECK_THROWS(nochka_weights(cfg_few));
}

TEST_CASE("select_subset_R0") {
    auto V = VarietyPresentation::conic_p2();
    std::vector<HomogeneousPolynomial> tangents;
    for (long a : {1, 2, 3, -1, -2, 5}) tangents.push_back(tangent_line(a));
    auto cfg = PositionConfig::make(V, tangents, 2);
    auto w = nochka_weights(cfg);
    QuotientBasis B(V, 1);
    REQUIRE(B.M() == 2);

    std::vector<int> R{0, 1, 2};
    // all E = 1: any full-rank pair qualifies
    auto r0 = select_subset_R0(w, cfg, B, R, std::vector<double>(6, 1.0));
    CHECK(r0.size() == 2);

    // E = (e, e, 1, ...): brute-force oracle over all pairs
    std::vector<double> E{std::exp(1.0), std::exp(1.0), 1.0, 1.0, 1.0, 1.0};
    auto r1 = select_subset_R0(w, cfg, B, R, E);
    double target = 0.0;
    for (int i : R) target += w.omegas[i].get_d() * std::log(E[i]);
    double got = 0.0;
    for (int i : r1) got += std::log(E[i]);
    CHECK(got >= target - 1e-12);
    // oracle: the best pair is {0, 1}
    CHECK(r1 == std::vector<int>{0, 1});

    CHECK_THROWS(select_subset_R0(w, cfg, B, R, std::vector<double>(6, 0.5)));
}

TEST_CASE("norm comparability constants") {
    auto P2 = VarietyPresentation::projective_space(2);
    std::vector<HomogeneousPolynomial> planes;
    for (int i = 0; i <= 2; ++i) planes.push_back(HomogeneousPolynomial::variable(2, i));
    auto cfg = PositionConfig::make(P2, planes, 2);
    auto nc = norm_comparability(cfg, {0, 1, 2}, 100, 5);
    CHECK(nc.alpha_hat > 0.0);
    CHECK(nc.beta_hat <= 1.0 + 1e-12); // coordinate moduli never exceed the norm
    // monotone: more samples can only shrink the min (same seed => nested)
    auto nc2 = norm_comparability(cfg, {0, 1, 2}, 400, 5);
    CHECK(nc2.alpha_hat <= nc.alpha_hat + 1e-15);

    // conic with three tangents
    auto V = VarietyPresentation::conic_p2();
    std::vector<HomogeneousPolynomial> tangents{tangent_line(1), tangent_line(2),
                                                tangent_line(3)};
    auto cfgc = PositionConfig::make(V, tangents, 2);
    auto ncc = norm_comparability(cfgc, {0, 1, 2}, 200, 7);
    CHECK(ncc.alpha_hat > 0.0);
    CHECK(std::isfinite(ncc.beta_hat));

    VarietyPresentation bare;
    bare.n = 2;
    bare.k = 1;
    CHECK_THROWS(common_zero_empty(bare, planes));
}
