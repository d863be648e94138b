#pragma once

#include "vdt/exppoly.hpp"
#include "vdt/position.hpp"
#include "vdt/wronskian.hpp"
#include "vdt/zeros.hpp"

#include <limits>
#include <string>
#include <vector>

namespace vdt {

/// Discretization of s < r < infinity for tail estimates.
struct RadiusGrid {
    double s = 1.0;
    std::vector<double> radii;

    static RadiusGrid geometric(double s, double r0, double r1, int count);
    /// Indexes of the final third, used by every limsup/liminf estimate.
    std::vector<std::size_t> tail_indices() const;
};

/// N(r, s, nu) with optional truncation, evaluated by the closed-form sum
/// over the divisor support.
double counting_function(const Divisor& nu, double r, double s,
                         int truncation = std::numeric_limits<int>::max());

/// Overflow-safe pointwise-compiled view of a curve.
struct CompiledCurve {
    std::vector<CompiledExpPoly> comps;
    explicit CompiledCurve(const CurveRep& F) {
        for (const auto& c : F.components) comps.push_back(compile(c));
    }
    double log_norm(const CDouble& z) const { return log_norm_compiled(comps, z); }
};

struct CircleIntegral {
    double value = 0.0;
    double quad_error = 0.0;
    double radius_used = 0.0; // may be perturbed off a singular circle
};

/// m(r, s, num/den): circle means of log+ |phi|, difference.
struct ProximityResult {
    double value = 0.0;
    double quad_error = 0.0;
};
ProximityResult proximity(const ExpPoly& num, const ExpPoly& den, double r, double s);

/// T_f(r, s) for a curve: circle means of log ||F||, difference.
double characteristic(const CompiledCurve& F, double r, double s, double* quad_error = nullptr);
double characteristic(const CurveRep& F, double r, double s);

/// T(r, s, phi) = m(r, s, phi) + N_{1/phi}(r, s) vs the curve characteristic
/// of (den : num); the difference must stay O(1) for reduced pairs.
struct FunctionCurveComparison {
    std::vector<double> radii;
    std::vector<double> t_function;
    std::vector<double> t_curve;
    std::vector<double> difference;
    double drift_top_decade = 0.0;
    bool bounded = true;
    bool reduced_common_factor = false; // a polynomial gcd was cancelled
};
FunctionCurveComparison function_vs_curve_characteristic(const ExpPoly& num, const ExpPoly& den,
                                                         const RadiusGrid& grid,
                                                         double drift_bound = 0.5);

/// Lemma-2.2-style measurement of m(r, s, f^{(k)}/f) per curve component,
/// with a fitted bound c1 log+ T + c2 log r + c3 checked on a holdout tail.
struct LogDerivativeReport {
    struct ComponentFit {
        int component = 0;
        std::vector<double> measured;
        std::vector<double> predicted;
        double c1 = 0, c2 = 0, c3 = 0;
        bool holdout_ok = true;
    };
    std::vector<double> radii;
    std::vector<ComponentFit> fits;
};
LogDerivativeReport log_derivative_measurement(const CurveRep& F, int k, const RadiusGrid& grid);

enum class SingularityVerdict { Extends, Essential, Inconclusive };

struct SingularityReport {
    SingularityVerdict verdict = SingularityVerdict::Inconclusive;
    std::vector<double> ratios; // T(r,s)/log(r/s) over the grid
    double tail_estimate = 0.0;
};
SingularityReport essential_singularity_test(const CurveRep& F, const RadiusGrid& grid);

struct SmtRow {
    double r = 0;
    double T = 0;
    std::vector<double> N_full;  // per hypersurface, untruncated
    std::vector<double> N_trunc; // per hypersurface, truncated at M
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    double margin_over_T = 0;
};

struct SmtReport {
    bool refused = false;
    std::string refusal_reason;
    std::vector<GaussRat> degeneracy_witness; // basis coordinates when refused
    double coefficient = 0.0; // q - (2N-k+1)(M+1)/(k+1)
    std::vector<SmtRow> rows;
    bool pass = false;
    double min_tail_margin_over_T = 0.0;
    double eps_slack = 0.05;
};

/// Theorem-2.7-style verification: per-radius LHS/RHS and tail verdict.
SmtReport smt_verify(const CurveRep& F, const PositionConfig& cfg, const QuotientBasis& B,
                     const RadiusGrid& grid, double eps_slack = 0.05);

struct DefectResult {
    double defect = 0.0;
    bool clamped = false;
    bool defined = true;
    std::string note;
    std::vector<double> ratios; // N^{[M]}/(d T) along the grid
};

/// Truncated defect 1 - limsup N^{[M]}_{Q(f)} / (deg Q * T_f), tail-estimated.
DefectResult truncated_defect(const CurveRep& F, const HomogeneousPolynomial& Q,
                              const QuotientBasis& B, const RadiusGrid& grid);

struct DefectSumReport {
    bool applicable = false; // requires an essential singularity
    std::string note;
    std::vector<double> defects;
    double sum = 0.0;
    double bound = 0.0; // (2N-k+1) H_V(d) / (k+1)
    bool pass = false;
};

DefectSumReport defect_sum_check(const CurveRep& F, const PositionConfig& cfg,
                                 const QuotientBasis& B, const RadiusGrid& grid,
                                 double tolerance = 0.02);

} // namespace vdt
