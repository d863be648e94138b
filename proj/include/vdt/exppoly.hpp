#pragma once

#include "vdt/poly.hpp"
#include "vdt/univariate.hpp"

#include <map>
#include <optional>
#include <vector>

namespace vdt {

/// Exponential polynomial sum_j p_j(z) * exp(lambda_j z) with exact complex
/// rational lambda_j and coefficients. Closed under d/dz, products and
/// Wronskians, which keeps every symbolic layer of the library exact.
class ExpPoly {
public:
    ExpPoly() = default;

    static ExpPoly zero() { return {}; }
    static ExpPoly constant(GaussRat c) { return from_poly(GPoly::constant(std::move(c))); }
    static ExpPoly from_poly(GPoly p) {
        ExpPoly f;
        if (!p.is_zero()) f.terms_[GaussRat(0)] = std::move(p);
        return f;
    }
    /// p(z) * exp(lambda z)
    static ExpPoly term(GaussRat lambda, GPoly p) {
        ExpPoly f;
        if (!p.is_zero()) f.terms_[std::move(lambda)] = std::move(p);
        return f;
    }
    static ExpPoly z() { return from_poly(GPoly::monomial(GaussRat(1), 1)); }
    static ExpPoly exp(GaussRat lambda) {
        return term(std::move(lambda), GPoly::constant(GaussRat(1)));
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
    }
    /// Polynomial part accessor; only meaningful when is_polynomial().
    GPoly polynomial() const {
        return terms_.empty() ? GPoly{} : terms_.begin()->second;
    }
    const std::map<GaussRat, GPoly>& terms() const { return terms_; }

    ExpPoly operator-() const;
    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const GaussRat& s, const ExpPoly& f);
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

    ExpPoly derivative() const;

    /// f(c z), exact.
    ExpPoly rescale(const GaussRat& c) const;

    /// Direct evaluation; throws EvalOverflow when exp(Re(lambda z)) cannot be
    /// represented. Use log_abs/eval_scaled on large annuli.
    CDouble eval(const CDouble& z) const;

    /// max over terms of Re(lambda z); the natural scaling exponent at z.
    double scale_at(const CDouble& z) const;
    /// f(z) * exp(-m), safe for any m >= scale_at(z).
    CDouble eval_scaled(const CDouble& z, double m) const;
    /// log |f(z)| computed against the natural scale; -inf at zeros of f.
    double log_abs(const CDouble& z) const;

private:
    void insert(const GaussRat& lambda, GPoly p);
    std::map<GaussRat, GPoly> terms_;
};

ExpPoly pow(const ExpPoly& f, unsigned e);
ExpPoly differentiate(const ExpPoly& f, int order);

struct EvalOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fast numeric view of an ExpPoly for quadrature / zero-search inner loops.
struct CompiledExpPoly {
    struct Term {
        CDouble lambda;
        std::vector<CDouble> coeffs; // ascending
    };
    std::vector<Term> terms;

    CDouble eval(const CDouble& z) const {
        CDouble acc{0.0, 0.0};
        for (const auto& t : terms) {
            CDouble p{0.0, 0.0};
            for (std::size_t i = t.coeffs.size(); i-- > 0;) p = p * z + t.coeffs[i];
            acc += p * std::exp(t.lambda * z);
        }
        return acc;
    }
    double scale_at(const CDouble& z) const {
        double m = 0.0;
        bool first = true;
        for (const auto& t : terms) {
            double s = (t.lambda * z).real();
            if (first || s > m) m = s, first = false;
        }
        return first ? 0.0 : m;
    }
    CDouble eval_scaled(const CDouble& z, double m) const {
        CDouble acc{0.0, 0.0};
        for (const auto& t : terms) {
            CDouble p{0.0, 0.0};
            for (std::size_t i = t.coeffs.size(); i-- > 0;) p = p * z + t.coeffs[i];
            acc += p * std::exp(t.lambda * z - m);
        }
        return acc;
    }
    double log_abs(const CDouble& z) const {
        double m = scale_at(z);
        double a = std::abs(eval_scaled(z, m));
        return a == 0.0 ? -std::numeric_limits<double>::infinity() : m + std::log(a);
    }
};

CompiledExpPoly compile(const ExpPoly& f);

/// Domain of definition for curves and divisors.
struct Region {
    enum class Kind { Disk, PuncturedDisk, Annulus };
    Kind kind = Kind::Disk;
    double a = 0.0; // Disk: unused; Punctured: s; Annulus: inner radius
    double b = 1.0; // Disk: R; Punctured: unused; Annulus: outer radius

    static Region disk(double R) { return {Kind::Disk, 0.0, R}; }
    static Region punctured_disk(double s) {
        return {Kind::PuncturedDisk, s, std::numeric_limits<double>::infinity()};
    }
    static Region annulus(double s, double t) { return {Kind::Annulus, s, t}; }

    bool contains(const CDouble& z) const {
        double r = std::abs(z);
        switch (kind) {
            case Kind::Disk: return r < b;
            case Kind::PuncturedDisk: return r >= a;
            case Kind::Annulus: return r >= a && r <= b;
        }
        return false;
    }
};

struct DivisorPoint {
    CDouble z;
    int multiplicity = 1;
};

/// Finite-support zero divisor on a region.
struct Divisor {
    std::vector<DivisorPoint> support;
    Region region;

    /// n(t, s): total multiplicity with s <= |z| <= t.
    int count(double t, double s) const {
        int n = 0;
        for (const auto& p : support) {
            double r = std::abs(p.z);
            if (r >= s && r <= t) n += p.multiplicity;
        }
        return n;
    }
    int total() const {
        int n = 0;
        for (const auto& p : support) n += p.multiplicity;
        return n;
    }
    void sort_canonical();
};

/// Holomorphic curve into P^n via a reduced representation on a region.
struct CurveRep {
    std::vector<ExpPoly> components;
    Region region;
    std::optional<VarietyPresentation> target;

    int dim() const { return static_cast<int>(components.size()) - 1; }

    std::vector<CDouble> eval(const CDouble& z) const;
    /// log ||F(z)||, overflow-safe.
    double log_norm(const CDouble& z) const;

    /// Exact check that the curve lies on its target variety.
    bool on_target() const;
};

/// Exact expansion of Q(f_0, ..., f_n) inside the ExpPoly class.
ExpPoly compose_with_polynomial(const HomogeneousPolynomial& Q, const CurveRep& F);
ExpPoly compose_with_polynomial(const HomogeneousPolynomial& Q,
                                const std::vector<ExpPoly>& components);

/// Stable log ||(g_0(z), ..., g_m(z))|| from compiled components.
double log_norm_compiled(const std::vector<CompiledExpPoly>& comps, const CDouble& z);

} // namespace vdt
