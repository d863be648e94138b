#include "vdt/metric.hpp"

#include "doctest.h"

#include <cmath>

using namespace vdt;

namespace {

HomogeneousPolynomial tangent_line(long a) {
    Rat ar(a);
    return HomogeneousPolynomial::linear({GaussRat(ar * ar), GaussRat(-2 * ar), GaussRat(1)});
}

DerivedCurveSet conic_curve_set() {
    auto V = VarietyPresentation::conic_p2();
    QuotientBasis B(V, 1);
    auto z = ExpPoly::z();
    CurveRep F{{ExpPoly::constant(GaussRat(1)), z, z * z}, Region::disk(2.0), V};
    return DerivedCurveSet(F, B);
}

} // namespace

TEST_CASE("sigma/tau identities for M <= 12") {
    for (int M = 1; M <= 12; ++M) {
        ContactConstants c(M);
        CHECK(c.sigma[0] == 0);
        for (int p = 0; p <= M; ++p) CHECK(c.sigma[p + 1] - c.sigma[p] == p + 1);
        long sum = 0;
        for (int p = 1; p <= M; ++p) sum += c.sigma[p];
        CHECK(c.tau[M] == sum);
    }
}

TEST_CASE("phi_jp formula against direct contact evaluation") {
    auto D = conic_curve_set();
    const int M = D.M();
    REQUIRE(M == 2);
    auto Q = tangent_line(2);
    double delta = 4.0;
    CDouble z{1.0, 1.0};

    auto ip1 = interior_product_against(D, M - 1, Q);
    auto ipM = interior_product_against(D, M, Q);
    auto phi = phi_jp(D, ip1, ipM, delta, z);
    REQUIRE(!phi.excluded);
    // numerator phi_{V,M} == 1
    auto cM = contact_function(D, M, ipM, z);
    CHECK(cM.value == doctest::Approx(1.0).epsilon(1e-10));
    auto c1 = contact_function(D, M - 1, ip1, z);
    double expect = 1.0 / (c1.value * std::pow(std::log(delta / c1.value), 2));
    CHECK(phi.value == doctest::Approx(expect).epsilon(1e-10));

    CHECK_THROWS(phi_jp(D, ip1, ipM, 0.5, z));
}

TEST_CASE("sum-to-product inequality on the conic scenario") {
    auto D = conic_curve_set();
    auto V = VarietyPresentation::conic_p2();
    std::vector<HomogeneousPolynomial> tangents;
    for (long a : {1, 2, 3, -1, -2, 5}) tangents.push_back(tangent_line(a));
    auto cfg = PositionConfig::make(V, tangents, 2);
    auto w = nochka_weights(cfg);

    std::vector<std::vector<GaussRat>> coords;
    for (const auto& Q : cfg.lifted) coords.push_back(D.basis().reduce(Q));

    auto samples = disk_samples(1.8, 15, [&](const CDouble& z) {
        // exclude tangency parameters (contact zeros live there)
        for (long a : {1, 2, 3, -1, -2}) // 5 is outside the disk anyway
            if (std::abs(z - CDouble(double(a), 0.0)) < 0.15) return true;
        return false;
    });
    REQUIRE(samples.size() > 100);
    for (int p = 0; p <= D.M() - 1; ++p) {
        auto res = sum_to_product_check(D, coords, w.omegas, 4.0, p, samples);
        CHECK(res.pass);
        CHECK(res.C_hat > 0.0);
    }

    // q = 1, omega = 1: LHS/RHS = Phi^(1 - 1/(M-p)) stays positive
    auto res1 = sum_to_product_check(D, {coords[0]}, {Rat(1)}, 4.0, 0, samples);
    CHECK(res1.pass);
}

TEST_CASE("divisor inequality: conic tangents, exact equality at double contacts") {
    auto V = VarietyPresentation::conic_p2();
    std::vector<HomogeneousPolynomial> tangents;
    for (long a : {1, 2, 3, -1, -2, 5}) tangents.push_back(tangent_line(a));
    auto cfg = PositionConfig::make(V, tangents, 2);
    auto w = nochka_weights(cfg);
    QuotientBasis B(V, 1);
    auto z = ExpPoly::z();
    CurveRep F{{ExpPoly::constant(GaussRat(1)), z, z * z}, Region::disk(10.0), V};

    auto rep = divisor_inequality_check(F, cfg, w, B);
    REQUIRE(rep.applicable);
    CHECK(rep.pass);
    REQUIRE(rep.rows.size() == 6); // one zero class per tangency parameter
    for (const auto& row : rep.rows) {
        int total_ord = 0;
        for (int e : row.ord_q) total_ord += e;
        CHECK(total_ord == 2); // each tangent line meets the curve doubly
        CHECK(row.lhs == Rat(0)); // exact cancellation at a double contact
    }
}

TEST_CASE("divisor inequality: simple zeros and vacuous case") {
    auto P1 = VarietyPresentation::projective_space(1);
    auto x0 = HomogeneousPolynomial::variable(1, 0);
    auto x1 = HomogeneousPolynomial::variable(1, 1);
    auto l2 = HomogeneousPolynomial::linear({GaussRat(-2), GaussRat(1)});
    auto cfg = PositionConfig::make(P1, {x0, x1, l2}, 1);
    auto w = nochka_weights(cfg);
    QuotientBasis B(P1, 1);
    auto z = ExpPoly::z();
    CurveRep F{{ExpPoly::constant(GaussRat(1)), z}, Region::disk(10.0), {}};
    auto rep = divisor_inequality_check(F, cfg, w, B);
    REQUIRE(rep.applicable);
    CHECK(rep.pass);
    // simple zero of one Q_j: contribution -w + w*1 = 0 plus ord(W) >= 0
    for (const auto& row : rep.rows) CHECK(row.lhs >= Rat(0));

    // non-polynomial components are refused
    CurveRep Fe{{ExpPoly::constant(GaussRat(1)), ExpPoly::exp(GaussRat(1))}, Region::disk(2.0), {}};
    CHECK(!divisor_inequality_check(Fe, cfg, w, B).applicable);
}

TEST_CASE("schwarz bound check") {
    double R = 2.0;
    auto samples = disk_samples(R, 21);
    CHECK(schwarz_bound_check([](const CDouble&) { return 0.0; }, R, samples).pass);
    auto extremal = [R](const CDouble& z) { return 2.0 * R / (R * R - std::norm(z)); };
    auto res = schwarz_bound_check(extremal, R, samples);
    CHECK(res.pass);
    CHECK(res.worst_ratio == doctest::Approx(1.0));
    auto too_big = [&](const CDouble& z) { return 1.01 * extremal(z); };
    CHECK(!schwarz_bound_check(too_big, R, samples).pass);
}

TEST_CASE("main lemma rho arithmetic") {
    MainLemmaParams p;
    p.M = 2;
    p.d = 1;
    p.omegas = {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
    p.eta_j.assign(7, 0.1);
    p.epsilon = 0.01;
    // gamma = 7*0.9 - 3 = 3.3 > eps (sigma_3 + sum eta/q) = 0.01*(6+0.1)
    auto der = main_lemma_rho(p);
    ContactConstants cc(p.M);
    CHECK(der.h > cc.sigma[p.M] + p.epsilon * cc.tau[p.M]);
    CHECK(der.rho_in_range);
    CHECK(der.rho == doctest::Approx((cc.sigma[2] + p.epsilon * cc.tau[2]) / der.h));
    CHECK(der.rho_star == doctest::Approx(1.0 / ((1.0 - der.rho) * der.h)));
}

TEST_CASE("poincare metric calibrates the curvature checker") {
    double R = 1.0;
    auto log_lambda = [R](const CDouble& z) {
        return std::log(2.0 * R) - std::log(R * R - std::norm(z));
    };
    auto grid = disk_samples(0.6 * R, 12);
    auto res = curvature_negativity_check(log_lambda, grid, 1e-3, 1.0);
    CHECK(!res.inconclusive);
    CHECK(res.pass);
    CHECK(res.pass_fraction == doctest::Approx(1.0));

    // relative agreement Delta log lambda == lambda^2 to 1e-6
    auto lap = [&](const CDouble& z, double h) {
        return (log_lambda(z + CDouble{h, 0}) + log_lambda(z - CDouble{h, 0}) +
                log_lambda(z + CDouble{0, h}) + log_lambda(z - CDouble{0, h}) -
                4.0 * log_lambda(z)) /
               (h * h);
    };
    for (const auto& z : grid) {
        double lam2 = std::exp(2.0 * log_lambda(z));
        CHECK(std::abs(lap(z, 5e-4) - lam2) / lam2 < 1e-6);
    }

    // flat metric is the negative control
    auto flat = [](const CDouble&) { return std::log(2.0); };
    auto neg = curvature_negativity_check(flat, grid, 1e-3, 1.0);
    CHECK(!neg.pass);
    CHECK(neg.pass_fraction == doctest::Approx(0.0));
}

TEST_CASE("main lemma eta: zero-free scenario, bound and negativity") {
    auto P1 = VarietyPresentation::projective_space(1);
    QuotientBasis B(P1, 1);
    auto one = ExpPoly::constant(GaussRat(1));
    auto ez = ExpPoly::exp(GaussRat(1));
    double R = 1.0;
    CurveRep F{{one, ez}, Region::disk(R), {}};
    DerivedCurveSet D(F, B);

    auto x0 = HomogeneousPolynomial::variable(1, 0);
    auto x1 = HomogeneousPolynomial::variable(1, 1);
    auto l3 = HomogeneousPolynomial::linear({GaussRat(-3), GaussRat(1)}); // e^z - 3, zero-free on D(1)
    auto cfg = PositionConfig::make(P1, {x0, x1, l3}, 1);
    auto w = nochka_weights(cfg);

    MainLemmaParams params;
    params.M = B.M();
    params.d = cfg.d;
    params.omegas = w.omegas;
    params.eta_j.assign(3, 0.1);
    params.epsilon = 0.05;
    REQUIRE(params.gamma() > 0.0);

    std::vector<std::function<double(const CDouble&)>> logk(
        3, [](const CDouble&) { return 0.0; });
    auto samples = disk_samples(R, 23, nullptr, 0.02);
    auto res = main_lemma_eta(D, cfg, params, logk, R, samples);
    REQUIRE(!res.refused);
    for (double le : res.log_eta) CHECK(std::isfinite(le));
    CHECK(res.bound_pass);
    CHECK(res.C_fit > 0.0);

    // epsilon at the hypothesis boundary is refused
    MainLemmaParams bad = params;
    bad.epsilon = bad.gamma() / (ContactConstants(params.M).sigma[params.M + 1] + 0.1);
    auto refuse = main_lemma_eta(D, cfg, bad, logk, R, samples);
    CHECK(refuse.refused);

    // negativity of log eta as a conformal factor on an interior grid
    auto grid = disk_samples(0.5 * R, 10);
    std::vector<InteriorProduct> ips;
    auto log_eta_at = [&](const CDouble& z) {
        MainLemmaResult r1 = main_lemma_eta(D, cfg, params, logk, R, {z});
        return r1.log_eta[0];
    };
    // fit a strictly positive curvature constant on the grid, then verify
    double rmin = std::numeric_limits<double>::infinity();
    auto lap = [&](const CDouble& z, double h) {
        return (log_eta_at(z + CDouble{h, 0}) + log_eta_at(z - CDouble{h, 0}) +
                log_eta_at(z + CDouble{0, h}) + log_eta_at(z - CDouble{0, h}) -
                4.0 * log_eta_at(z)) /
               (h * h);
    };
    for (const auto& z : grid)
        rmin = std::min(rmin, lap(z, 1e-3) / std::exp(2.0 * log_eta_at(z)));
    REQUIRE(rmin > 0.0);
    auto neg = curvature_negativity_check(log_eta_at, grid, 1e-3, 0.5 * rmin);
    CHECK(!neg.inconclusive);
    CHECK(neg.pass);
}

TEST_CASE("derived norm inequality: closed form at M=1 and conic samples") {
    auto P1 = VarietyPresentation::projective_space(1);
    QuotientBasis B(P1, 1);
    CurveRep F{{ExpPoly::constant(GaussRat(1)), ExpPoly::z()}, Region::disk(2.0), {}};
    DerivedCurveSet D(F, B);
    auto samples = disk_samples(1.5, 9);
    auto rep = derived_norm_inequality_check(D, samples, 1e-3);
    CHECK(rep.pass);
    for (const auto& row : rep.rows) {
        // oracle: dd^c log|F_0|^2 = 1/(1+|z|^2)^2 = rhs, equality throughout
        double oracle = 1.0 / std::pow(1.0 + std::norm(row.z), 2);
        CHECK(row.lhs == doctest::Approx(oracle).epsilon(1e-5));
        CHECK(row.rhs == doctest::Approx(oracle).epsilon(1e-10));
    }

    auto Dc = conic_curve_set();
    auto repc = derived_norm_inequality_check(Dc, disk_samples(1.8, 9), 1e-3);
    CHECK(repc.pass);
}
