#include "vdt/poly.hpp"

#include "doctest.h"

#include <random>

using namespace vdt;

namespace {

// Independent rank oracle: plain in-place Gaussian elimination over the
// Gaussian rationals, no shared code with ExactRowSpace.
std::size_t oracle_rank(std::vector<std::vector<GaussRat>> m) {
    std::size_t rank = 0;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == rank || m[r2][c].is_zero()) continue;
            GaussRat f = m[r2][c] / m[rank][c];
            for (std::size_t c2 = c; c2 < cols; ++c2) m[r2][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

GaussRat det3(const std::vector<std::vector<GaussRat>>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

HomogeneousPolynomial random_form(int n, int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> box(-5, 5);
    HomogeneousPolynomial p(n, d);
    for (const auto& m : monomial_basis(n, d)) {
        int re = box(rng), im = box(rng);
        if (re || im) p.set(m, GaussRat(re, im));
    }
    return p;
}

} // namespace

TEST_CASE("monomial_basis enumerates graded-lex") {
    auto b = monomial_basis(1, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0].exponents == std::vector<int>{2, 0});
    CHECK(b[1].exponents == std::vector<int>{1, 1});
    CHECK(b[2].exponents == std::vector<int>{0, 2});

    auto b2 = monomial_basis(2, 1);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0].exponents == std::vector<int>{1, 0, 0});
    CHECK(b2[1].exponents == std::vector<int>{0, 1, 0});
    CHECK(b2[2].exponents == std::vector<int>{0, 0, 1});

    CHECK(monomial_basis(2, 2).size() == 6);
}

TEST_CASE("hilbert function of projective space is the full binomial") {
    for (int n = 0; n <= 4; ++n) {
        auto V = VarietyPresentation::projective_space(n);
        for (int d = 1; d <= 6; ++d) CHECK(hilbert_function(V, d) == binomial(n + d, n));
    }
    CHECK_THROWS(hilbert_function(VarietyPresentation::projective_space(2), 0));
}

TEST_CASE("hilbert function of the conic via independent rank oracle") {
    auto V = VarietyPresentation::conic_p2();
    REQUIRE(V.parametrization_consistent());

    // oracle: the d=2 ideal slice is spanned by the single generator
    std::vector<std::vector<GaussRat>> rows{V.generators[0].dense_coeffs()};
    CHECK(oracle_rank(rows) == 1);
    CHECK(hilbert_function(V, 2) == 6 - 1);

    // d=3 slice: generator times the three linear monomials
    std::vector<std::vector<GaussRat>> rows3;
    for (int i = 0; i <= 2; ++i)
        rows3.push_back((V.generators[0] * HomogeneousPolynomial::variable(2, i)).dense_coeffs());
    CHECK(hilbert_function(V, 3) == binomial(5, 2) - static_cast<int>(oracle_rank(rows3)));
}

TEST_CASE("minimality conic presentation is consistent and has H(1)=3, H(2)=5") {
    auto V = VarietyPresentation::minimality_conic();
    REQUIRE(V.parametrization_consistent());
    CHECK(hilbert_function(V, 1) == 3);
    CHECK(hilbert_function(V, 2) == 5);
}

TEST_CASE("quotient basis: P^1 d=1 and conic d=2") {
    auto P1 = VarietyPresentation::projective_space(1);
    QuotientBasis B(P1, 1);
    CHECK(B.M() == 1);
    CHECK(B.basis_monomials()[0].exponents == std::vector<int>{1, 0});
    CHECK(B.basis_monomials()[1].exponents == std::vector<int>{0, 1});

    auto V = VarietyPresentation::conic_p2();
    QuotientBasis BC(V, 2);
    CHECK(BC.M() == 4);
    CHECK(BC.basis_monomials().size() == 5);
}

TEST_CASE("reduction is linear and idempotent") {
    auto V = VarietyPresentation::conic_p2();
    QuotientBasis B(V, 2);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        auto P = random_form(2, 2, rng);
        auto Q = random_form(2, 2, rng);
        GaussRat a(3, -1), b(-2, 5);
        auto lhs = B.reduce(a * P + b * Q);
        auto rp = B.reduce(P);
        auto rq = B.reduce(Q);
        for (int i = 0; i <= B.M(); ++i) CHECK(lhs[i] == a * rp[i] + b * rq[i]);

        // idempotence: the representative combination reduces to itself
        HomogeneousPolynomial rep(2, 2);
        for (int i = 0; i <= B.M(); ++i) {
            rep = rep + rp[i] * B.representative(i);
        }
        auto again = B.reduce(rep);
        for (int i = 0; i <= B.M(); ++i) CHECK(again[i] == rp[i]);
    }
}

TEST_CASE("rank_in_quotient") {
    auto P1 = VarietyPresentation::projective_space(1);
    QuotientBasis B(P1, 2);
    auto x0 = HomogeneousPolynomial::variable(1, 0);
    auto x1 = HomogeneousPolynomial::variable(1, 1);
    auto s0 = x0 * x0;
    auto s1 = x1 * x1;
    auto s2 = (x0 + x1) * (x0 + x1);

    CHECK(rank_in_quotient(B, {s0, s0}) == 1);

    std::vector<HomogeneousPolynomial> reps;
    for (int i = 0; i <= B.M(); ++i) reps.push_back(B.representative(i));
    CHECK(rank_in_quotient(B, reps) == B.M() + 1);

    // 3x3 determinant oracle on the coordinate vectors
    std::vector<std::vector<GaussRat>> mat{B.reduce(s0), B.reduce(s1), B.reduce(s2)};
    REQUIRE(!det3(mat).is_zero());
    CHECK(rank_in_quotient(B, {s0, s1, s2}) == 3);

    CHECK_THROWS(rank_in_quotient(B, {x0}));
}

TEST_CASE("completion hypersurfaces") {
    auto P1 = VarietyPresentation::projective_space(1);
    QuotientBasis B1(P1, 1); // M = 1 = k for P^1 with k=1
    auto x0 = HomogeneousPolynomial::variable(1, 0);
    auto x1 = HomogeneousPolynomial::variable(1, 1);
    CHECK(completion_hypersurfaces(B1, {x0, x1}, 1).hypersurfaces.empty());

    QuotientBasis B2(P1, 2); // M = 2
    auto s0 = x0 * x0;
    auto s1 = x1 * x1;
    auto res = completion_hypersurfaces(B2, {s0, s1}, 1, /*seed=*/3);
    REQUIRE(res.hypersurfaces.size() == 1);
    // determinant oracle over the claimed completion
    std::vector<std::vector<GaussRat>> mat{B2.reduce(s0), B2.reduce(s1),
                                           B2.reduce(res.hypersurfaces[0])};
    CHECK(!det3(mat).is_zero());
    // self-certifying exhaustive property
    for (const auto& R : {std::vector<int>{0, 1}}) {
        std::vector<HomogeneousPolynomial> all = res.hypersurfaces;
        for (int i : R) all.push_back(i == 0 ? s0 : s1);
        CHECK(rank_in_quotient(B2, all) == B2.M() + 1);
    }
}

TEST_CASE("hilbert bounds 1 <= H <= binom") {
    auto V = VarietyPresentation::conic_p2();
    for (int d = 1; d <= 5; ++d) {
        int h = hilbert_function(V, d);
        CHECK(h >= 1);
        CHECK(h <= binomial(2 + d, 2));
        CHECK(h == 2 * d + 1); // rational normal curve of degree 2
    }
}
