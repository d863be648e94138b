#include "vdt/exppoly.hpp"
#include "vdt/quadrature.hpp"
#include "vdt/zeros.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

using namespace vdt;

namespace {

ExpPoly random_exppoly(std::mt19937_64& rng, int max_terms = 2, int max_deg = 2) {
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> nt(1, max_terms);
    ExpPoly f;
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        GaussRat lambda(small(rng), small(rng));
        std::vector<GaussRat> cs;
        std::uniform_int_distribution<int> nd(0, max_deg);
        int deg = nd(rng);
        for (int i = 0; i <= deg; ++i) cs.push_back(GaussRat(small(rng), small(rng)));
        f = f + ExpPoly::term(lambda, GPoly(cs));
    }
    return f;
}

} // namespace

TEST_CASE("differentiation examples") {
    auto z = ExpPoly::z();
    CHECK(differentiate(z * z, 1) == GaussRat(2) * z);

    // d/dz (z e^z) = (z+1) e^z
    auto ze = z * ExpPoly::exp(GaussRat(1));
    auto expect = ExpPoly::term(GaussRat(1), GPoly{GaussRat(1), GaussRat(1)});
    CHECK(differentiate(ze, 1) == expect);

    CHECK(differentiate(ExpPoly::exp(GaussRat(2)), 3) == GaussRat(8) * ExpPoly::exp(GaussRat(2)));
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_exppoly(rng);
        auto g = random_exppoly(rng);
        GaussRat a(2, 1), b(0, -3);
        CHECK(differentiate(a * f + b * g, 1) ==
              a * differentiate(f, 1) + b * differentiate(g, 1));
        CHECK(differentiate(f * g, 1) ==
              differentiate(f, 1) * g + f * differentiate(g, 1));
    }
}

TEST_CASE("evaluation") {
    CHECK(std::abs(ExpPoly::exp(GaussRat(1)).eval({0, 0}) - CDouble{1, 0}) < 1e-15);
    auto p = ExpPoly::z() * ExpPoly::z() - ExpPoly::constant(GaussRat(1));
    CHECK(std::abs(p.eval({2, 0}) - CDouble{3, 0}) < 1e-14);
    auto ze = ExpPoly::z() * ExpPoly::exp(GaussRat(1));
    CHECK(std::abs(ze.eval({1, 0}) - CDouble{std::exp(1.0), 0}) < 1e-14);
    CHECK_THROWS_AS(ExpPoly::exp(GaussRat(1)).eval({1000.0, 0.0}), EvalOverflow);
    // scaled path stays finite where direct evaluation overflows
    CHECK(ExpPoly::exp(GaussRat(1)).log_abs({1000.0, 0.0}) == doctest::Approx(1000.0));
}

TEST_CASE("compose with polynomial") {
    auto x0 = HomogeneousPolynomial::variable(1, 0);
    CurveRep F1{{ExpPoly::constant(GaussRat(1)), ExpPoly::z()}, Region::punctured_disk(1.0), {}};
    CHECK(compose_with_polynomial(x0, F1) == ExpPoly::constant(GaussRat(1)));

    HomogeneousPolynomial x0x1(1, 2);
    x0x1.set(MultiIndex{{1, 1}}, GaussRat(1));
    CurveRep F2{{ExpPoly::constant(GaussRat(1)), ExpPoly::exp(GaussRat(1))},
                Region::punctured_disk(1.0),
                {}};
    CHECK(compose_with_polynomial(x0x1, F2) == ExpPoly::exp(GaussRat(1)));

    auto V = VarietyPresentation::conic_p2();
    CurveRep F3{{ExpPoly::constant(GaussRat(1)), ExpPoly::z(), ExpPoly::z() * ExpPoly::z()},
                Region::punctured_disk(1.0),
                V};
    CHECK(compose_with_polynomial(V.generators[0], F3).is_zero());
    CHECK(F3.on_target());
}

TEST_CASE("composition agrees with pointwise evaluation") {
    std::mt19937_64 rng(5);
    auto V = VarietyPresentation::projective_space(2);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> small(-3, 3);
        HomogeneousPolynomial Q(2, 2);
        for (const auto& m : monomial_basis(2, 2))
            Q.set(m, GaussRat(small(rng), small(rng)));
        std::vector<ExpPoly> comps{ExpPoly::constant(GaussRat(1)), random_exppoly(rng, 1, 2),
                                   random_exppoly(rng, 1, 1)};
        auto composed = compose_with_polynomial(Q, comps);
        CDouble z{0.3, -0.7};
        std::vector<CDouble> vals;
        for (const auto& c : comps) vals.push_back(c.eval(z));
        CDouble direct = Q.eval(vals);
        CDouble via = composed.eval(z);
        CHECK(std::abs(via - direct) <= 1e-10 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("quadrature calibration: Jensen means") {
    // (1/2pi) int log|r e^{i t} - a| dt = log max(r, |a|)
    auto jensen = [](double r, double a) {
        return circle_mean([&](double th) {
            CDouble z = std::polar(r, th);
            return std::log(std::abs(z - CDouble{a, 0.0}));
        });
    };
    CHECK(jensen(2.0, 1.0).value == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(jensen(1.0, 2.0).value == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    auto half = circle_mean([](double th) { return std::cos(th) * std::cos(th); });
    CHECK(half.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("zeros of polynomials on annuli") {
    auto z = ExpPoly::z();
    auto one = ExpPoly::constant(GaussRat(1));

    auto rep = zeros_on_annulus(z * z - one, 0.5, 2.0);
    REQUIRE(rep.divisor.total() == 2);
    CHECK(rep.polynomial_mode);
    CHECK(rep.cross_checked);
    bool plus = false, minus = false;
    for (const auto& p : rep.divisor.support) {
        if (std::abs(p.z - CDouble{1, 0}) < 1e-9) plus = true;
        if (std::abs(p.z - CDouble{-1, 0}) < 1e-9) minus = true;
    }
    CHECK(plus);
    CHECK(minus);

    auto cubed = (z - one) * (z - one) * (z - one);
    auto rep3 = zeros_on_annulus(cubed, 0.5, 2.0);
    REQUIRE(rep3.divisor.support.size() == 1);
    CHECK(rep3.divisor.support[0].multiplicity == 3);
    CHECK(std::abs(rep3.divisor.support[0].z - CDouble{1, 0}) < 1e-9);
}

TEST_CASE("exponential never vanishes") {
    auto rep = zeros_on_annulus(ExpPoly::exp(GaussRat(1)), 1.0, 100.0);
    CHECK(rep.divisor.support.empty());
}

TEST_CASE("zeros of e^z - 2 against the lattice oracle") {
    auto f = ExpPoly::exp(GaussRat(1)) - ExpPoly::constant(GaussRat(2));
    auto rep = zeros_on_annulus(f, 1.0, 20.0);
    // oracle: z_k = log 2 + 2 pi i k
    const double l2 = std::log(2.0);
    std::vector<CDouble> expect;
    for (int k = -3; k <= 3; ++k) {
        CDouble zk{l2, 2.0 * std::numbers::pi * k};
        double m = std::abs(zk);
        if (m >= 1.0 && m <= 20.0) expect.push_back(zk);
    }
    REQUIRE(rep.divisor.total() == static_cast<int>(expect.size()));
    for (const auto& e : expect) {
        bool found = false;
        for (const auto& p : rep.divisor.support)
            if (std::abs(p.z - e) < 1e-6) found = p.multiplicity == 1;
        CHECK(found);
    }
}

TEST_CASE("mixed polynomial-exponential zeros with multiplicity") {
    auto z = ExpPoly::z();
    auto one = ExpPoly::constant(GaussRat(1));
    auto two = ExpPoly::constant(GaussRat(2));
    auto f = (z * z - one) * (ExpPoly::exp(GaussRat(1)) - two);
    auto rep = zeros_on_annulus(f, 0.5, 7.0);
    // +-1, log2, log2 +- 2pi i  => 5 simple zeros
    CHECK(rep.divisor.total() == 5);

    auto g = ExpPoly::exp(GaussRat(1)) - two;
    auto rep2 = zeros_on_annulus(g * g, 0.5, 7.0);
    CHECK(rep2.divisor.total() == 6);
    for (const auto& p : rep2.divisor.support) CHECK(p.multiplicity == 2);
}

TEST_CASE("reduced representation certificates") {
    auto z = ExpPoly::z();
    auto one = ExpPoly::constant(GaussRat(1));

    CurveRep good{{one, z}, Region::punctured_disk(1.0), {}};
    CHECK(certify_reduced(good).reduced);

    // common zero at the origin, but outside the annulus
    CurveRep shifted{{z, z * z}, Region::annulus(0.5, 2.0), {}};
    CHECK(certify_reduced(shifted).reduced);

    // common zero at 1, inside
    CurveRep bad{{z * (z - one), z * z - z}, Region::annulus(0.5, 2.0), {}};
    auto cert = certify_reduced(bad);
    CHECK(!cert.reduced);
    CHECK(std::abs(cert.common_zero - CDouble{1, 0}) < 1e-7);

    // exponential pair sharing zeros of e^z-2
    auto e1 = ExpPoly::exp(GaussRat(1)) - ExpPoly::constant(GaussRat(2));
    CurveRep expbad{{e1, e1 * (z - one)}, Region::punctured_disk(1.0), {}};
    auto cert2 = certify_reduced(expbad, 1.0, 8.0);
    CHECK(!cert2.reduced);
}

TEST_CASE("rescale is exact") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        auto f = random_exppoly(rng);
        GaussRat c(3, 1);
        auto g = f.rescale(c);
        CDouble xi{0.21, -0.13};
        CDouble lhs = g.eval(xi);
        CDouble rhs = f.eval(c.to_complex() * xi);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}
