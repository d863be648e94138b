#include "vdt/wronskian.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace vdt;

namespace {

ExpPoly random_exppoly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> nt(1, 2);
    ExpPoly f;
    for (int t = 0, terms = nt(rng); t < terms; ++t) {
        GaussRat lambda(small(rng), small(rng));
        std::vector<GaussRat> cs;
        std::uniform_int_distribution<int> nd(0, 2);
        for (int i = 0, deg = nd(rng); i <= deg; ++i)
            cs.push_back(GaussRat(small(rng), small(rng)));
        f = f + ExpPoly::term(lambda, GPoly(cs));
    }
    if (f.is_zero()) f = ExpPoly::constant(GaussRat(1));
    return f;
}

} // namespace

TEST_CASE("wronskian basic identities") {
    auto one = ExpPoly::constant(GaussRat(1));
    auto z = ExpPoly::z();
    CHECK(wronskian({one, z, z * z}) == ExpPoly::constant(GaussRat(2)));

    // oracle: 2x2 determinant assembled from symbolic derivatives
    auto e1 = ExpPoly::exp(GaussRat(1));
    auto e2 = ExpPoly::exp(GaussRat(2));
    auto oracle = e1 * differentiate(e2, 1) - e2 * differentiate(e1, 1);
    CHECK(oracle == ExpPoly::exp(GaussRat(3)));
    CHECK(wronskian({e1, e2}) == oracle);

    CHECK(wronskian({e1, e1}).is_zero());
}

TEST_CASE("scaling identity W(g h_i) = g^{n+1} W(h)") {
    // spec'd instances
    auto one = ExpPoly::constant(GaussRat(1));
    auto z = ExpPoly::z();
    CHECK(wronskian_scaling_check({one, z}, ExpPoly::exp(GaussRat(1))));
    CHECK(wronskian_scaling_check({one, z, z * z}, one));
    CHECK(wronskian_scaling_check({one, z, z * z}, z));
    // W(e^z, z e^z) = e^{2z} directly
    auto e1 = ExpPoly::exp(GaussRat(1));
    CHECK(wronskian({e1, z * e1}) == e1 * e1);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<ExpPoly> h{random_exppoly(rng), random_exppoly(rng)};
        if (trial % 3 == 0) h.push_back(random_exppoly(rng));
        CHECK(wronskian_scaling_check(h, random_exppoly(rng)));
    }
}

TEST_CASE("W == 0 iff linearly dependent") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        auto f = random_exppoly(rng);
        auto g = random_exppoly(rng);
        // dependent triple
        auto h = GaussRat(2) * f + GaussRat(-3, 1) * g;
        CHECK(wronskian({f, g, h}).is_zero());
    }
    // independent catalogue families
    auto one = ExpPoly::constant(GaussRat(1));
    auto z = ExpPoly::z();
    CHECK(!wronskian({one, z, z * z, z * z * z}).is_zero());
    CHECK(!wronskian({ExpPoly::exp(GaussRat(1)), ExpPoly::exp(GaussRat(2)),
                      ExpPoly::exp(GaussRat(0, 1))})
               .is_zero());
    CHECK(!wronskian({one, ExpPoly::exp(GaussRat(1)), z * ExpPoly::exp(GaussRat(1))}).is_zero());
}

TEST_CASE("coordinate-change covariance of subset Wronskians") {
    // z = c xi: W_xi(h(c xi)) = c^{p(p+1)/2} W_z(h)(c xi), exact
    std::mt19937_64 rng(41);
    GaussRat c(3, -2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ExpPoly> h{random_exppoly(rng), random_exppoly(rng), random_exppoly(rng)};
        int p = static_cast<int>(h.size()) - 1;
        std::vector<ExpPoly> hs;
        for (const auto& f : h) hs.push_back(f.rescale(c));
        auto lhs = wronskian(hs);
        auto rhs = pow(c, static_cast<unsigned long>(p * (p + 1) / 2)) * wronskian(h).rescale(c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("derived curves on P^1") {
    auto P1 = VarietyPresentation::projective_space(1);
    QuotientBasis B(P1, 1);

    CurveRep Fz{{ExpPoly::constant(GaussRat(1)), ExpPoly::z()}, Region::punctured_disk(1.0), {}};
    DerivedCurveSet Dz(Fz, B);
    CHECK(Dz.M() == 1);
    // level 0 components are v_i(F)
    CHECK(Dz.subset_wronskian(0b01) == Fz.components[0]);
    CHECK(Dz.subset_wronskian(0b10) == Fz.components[1]);
    // level 1: W(1, z) = 1
    CHECK(Dz.subset_wronskian(0b11) == ExpPoly::constant(GaussRat(1)));
    CHECK(Dz.nondegenerate());

    CurveRep Fe{{ExpPoly::constant(GaussRat(1)), ExpPoly::exp(GaussRat(1))},
                Region::punctured_disk(1.0),
                {}};
    DerivedCurveSet De(Fe, B);
    // oracle: W(1, e^z) = d/dz e^z = e^z
    CHECK(De.subset_wronskian(0b11) == differentiate(ExpPoly::exp(GaussRat(1)), 1));
}

TEST_CASE("interior product consistency and contact values") {
    auto P1 = VarietyPresentation::projective_space(1);
    QuotientBasis B(P1, 1);
    CurveRep F{{ExpPoly::constant(GaussRat(1)), ExpPoly::exp(GaussRat(1))},
               Region::punctured_disk(1.0),
               {}};
    DerivedCurveSet D(F, B);

    auto x1 = HomogeneousPolynomial::variable(1, 1);
    auto ip0 = interior_product_against(D, 0, x1);
    REQUIRE(ip0.components.size() == 1);
    CHECK(ip0.components[0] == compose_with_polynomial(x1, F));
    CHECK(ip0.norm_factor == doctest::Approx(1.0));

    // phi_{V,0}(x1)(0) = 1/sqrt(2)
    auto c0 = contact_function(D, 0, ip0, {0.0, 0.0});
    CHECK(c0.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    // phi_{V,M} == 1 for any unit Q, several sample points
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    auto Q = HomogeneousPolynomial::linear({GaussRat(2, 1), GaussRat(-1, 3)});
    auto ipM = interior_product_against(D, 1, Q);
    for (int i = 0; i < 8; ++i) {
        CDouble z{u(rng), u(rng)};
        auto cM = contact_function(D, 1, ipM, z);
        CHECK(cM.value == doctest::Approx(1.0).epsilon(1e-12));
    }

    // 0 <= phi <= 1 for unit-normalized Q at sampled points
    for (int i = 0; i < 12; ++i) {
        CDouble z{u(rng), u(rng)};
        auto c = contact_function(D, 0, interior_product_against(D, 0, Q), z);
        CHECK(c.value >= 0.0);
        CHECK(c.value <= 1.0 + 1e-12);
    }
}

TEST_CASE("degenerate curve over I_2 is detected with witness") {
    auto P2 = VarietyPresentation::projective_space(2);
    QuotientBasis B(P2, 2);
    auto z = ExpPoly::z();
    CurveRep F{{ExpPoly::constant(GaussRat(1)), z, z * z}, Region::punctured_disk(1.0), {}};
    DerivedCurveSet D(F, B);
    CHECK(!D.nondegenerate());

    auto witness = D.degeneracy_witness();
    REQUIRE(!witness.empty());
    // the witness coordinates assemble a degree-2 hypersurface with Q(F) == 0
    HomogeneousPolynomial Q(2, 2);
    for (int i = 0; i <= B.M(); ++i) Q = Q + witness[i] * B.representative(i);
    CHECK(!Q.is_zero());
    CHECK(compose_with_polynomial(Q, F).is_zero());

    // contact value of the degeneracy hypersurface is 0 at p = 0
    auto ip = interior_product_against(D, 0, Q);
    auto c = contact_function(D, 0, ip, {0.7, 0.3});
    CHECK(c.value == doctest::Approx(0.0));
}
