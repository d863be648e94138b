#pragma once

#include "vdt/linalg.hpp"
#include "vdt/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vdt {

/// Exponent vector of a monomial in n+1 variables.
struct MultiIndex {
    std::vector<int> exponents;

    int degree() const {
        int d = 0;
        for (int e : exponents) d += e;
        return d;
    }
    std::size_t nvars() const { return exponents.size(); }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.exponents == b.exponents;
    }
};

/// Graded-lexicographic "comes before": lower degree first, then
/// lexicographically larger exponent vector first (x0 > x1 > ... > xn).
struct GradedLexBefore {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exponents > b.exponents;
    }
};

/// All multi-indices of degree d in n+1 variables, graded-lex order.
std::vector<MultiIndex> monomial_basis(int n, int d);

/// Homogeneous polynomial of fixed degree with exact Gaussian-rational
/// coefficients; also stands for the hypersurface it defines.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial() = default;
    HomogeneousPolynomial(int ambient_n, int degree) : n_(ambient_n), d_(degree) {}

    int ambient() const { return n_; }
    int degree() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, GaussRat, GradedLexBefore>& terms() const { return terms_; }

    void set(const MultiIndex& m, GaussRat c);
    GaussRat coeff(const MultiIndex& m) const;

    HomogeneousPolynomial operator-() const;
    friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b);
    friend HomogeneousPolynomial operator-(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b);
    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b);
    friend HomogeneousPolynomial operator*(const GaussRat& s, const HomogeneousPolynomial& p);
    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    HomogeneousPolynomial pow(unsigned e) const;

    /// Coefficient vector over monomial_basis(ambient, degree).
    std::vector<GaussRat> dense_coeffs() const;

    /// Substitute x_i -> components[i]; components live in their own variable
    /// set and share a common degree.
    HomogeneousPolynomial substitute(const std::vector<HomogeneousPolynomial>& components) const;

    CDouble eval(const std::vector<CDouble>& x) const;

    static HomogeneousPolynomial from_dense(int n, int d, const std::vector<GaussRat>& coeffs);
    /// Convenience: linear form c0*x0 + ... + cn*xn.
    static HomogeneousPolynomial linear(const std::vector<GaussRat>& c);
    static HomogeneousPolynomial variable(int n, int i, int d = 1);

    std::string str() const;

private:
    int n_ = 0;
    int d_ = 0;
    std::map<MultiIndex, GaussRat, GradedLexBefore> terms_;
};

/// A projective variety V in P^n given by ideal generators, optionally with a
/// rational parametrization P^t -> V used by emptiness checks.
struct VarietyPresentation {
    int n = 0; // ambient P^n
    int k = 0; // dim V
    std::vector<HomogeneousPolynomial> generators;
    // component polynomials in t+1 parameter variables, common degree
    std::optional<std::vector<HomogeneousPolynomial>> parametrization;
    std::string name;

    int param_vars() const {
        return parametrization ? (*parametrization)[0].ambient() + 1 : 0;
    }

    /// Exact check that every generator vanishes on the parametrization.
    bool parametrization_consistent() const;

    static VarietyPresentation projective_space(int n);
    /// Rational normal curve x1^2 = x0 x2 in P^2, parametrized by (u^2, uv, v^2).
    static VarietyPresentation conic_p2();
    /// The quadric x0^2+x1^2+x2^2 = 0 in P^2 that every R^3 Gauss map lies on.
    static VarietyPresentation minimality_conic();
};

int binomial(int n, int r);

/// H_V(d) on the degree-d slice of the generated ideal (see README for the
/// saturation caveat); exact rank computation.
int hilbert_function(const VarietyPresentation& V, int d);

/// Ordered basis of I_d(V): the first H_V(d) monomial classes that are
/// independent, with an exact reduction map onto their span.
class QuotientBasis {
public:
    QuotientBasis(const VarietyPresentation& V, int d);

    int d() const { return d_; }
    int M() const { return M_; }
    int ambient() const { return n_; }
    const std::vector<MultiIndex>& basis_monomials() const { return basis_monomials_; }
    HomogeneousPolynomial representative(int i) const;

    /// Coordinates a with [Q] = sum a_i [v_i]; Q must have degree d.
    std::vector<GaussRat> reduce(const HomogeneousPolynomial& Q) const;

private:
    int n_, d_, M_;
    std::vector<MultiIndex> all_monomials_;
    std::vector<MultiIndex> basis_monomials_;
    ExactRowSpace space_;           // ideal slice rows, then basis monomial rows
    std::size_t n_ideal_rows_ = 0;  // rows of the ideal slice inside space_
    std::vector<std::size_t> basis_row_index_; // add-index of each accepted monomial
};

int rank_in_quotient(const QuotientBasis& B, const std::vector<HomogeneousPolynomial>& polys);

struct CompletionResult {
    std::vector<HomogeneousPolynomial> hypersurfaces; // T_1..T_{M-k}
    unsigned long seed_used = 0;
    int attempts = 0;
};

/// Hypersurfaces T_1..T_{M-k} whose classes complete every full-rank
/// (k+1)-subset of Q to a full basis of the quotient; candidates are drawn
/// from small integer boxes and validated exhaustively.
CompletionResult completion_hypersurfaces(const QuotientBasis& B,
                                          const std::vector<HomogeneousPolynomial>& Q, int k,
                                          unsigned long seed = 1, int max_attempts = 64);

} // namespace vdt
