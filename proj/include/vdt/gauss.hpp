#pragma once

#include "vdt/nevanlinna.hpp"
#include "vdt/position.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vdt {

/// Minimal surface given by the holomorphic derivatives dx_i/dz of its
/// coordinate functions on a conformal chart. The chart is either the plane
/// (expanding disks exhaust it) or a cylinder with period 2 pi i (expanding
/// |Re z| strips exhaust it).
struct MinimalSurface {
    enum class Chart { Plane, Cylinder };

    std::string name;
    std::vector<ExpPoly> dz; // dx_i/dz
    Chart chart = Chart::Plane;
    std::optional<double> known_total_curvature;

    /// Sum of squares of the derivative components; identically zero exactly
    /// when the chart is isothermal for a minimal immersion.
    ExpPoly minimality_quadric() const;

    static MinimalSurface plane();
    static MinimalSurface enneper();
    static MinimalSurface catenoid();
    static MinimalSurface helicoid();
    /// Weierstrass data (f, g) = (1, z^2): the Gauss map is the parameter
    /// square composed with the conic embedding; total curvature -8 pi.
    static MinimalSurface enneper_deg2();

    static const std::vector<std::string>& catalogue_names();
    static MinimalSurface by_name(const std::string& name);
};

/// The generalized Gauss map as a holomorphic curve; refuses non-isothermal
/// data and cancels common polynomial factors of the components.
CurveRep gauss_map(const MinimalSurface& s, double base_radius = 1.0);

/// 2 ||G_z(z)||^2; flags branch points.
struct MetricDensity {
    double value = 0.0;
    bool branch_point = false;
};
MetricDensity induced_metric_density(const MinimalSurface& s, const CDouble& z);

struct TotalCurvatureReport {
    enum class Verdict { Finite, InfiniteOrUnknown };
    Verdict verdict = Verdict::InfiniteOrUnknown;
    double value = 0.0;      // converged integral when finite
    double inferred_l = 0.0; // -value / (2 pi)
    bool l_near_integer = false;
    std::vector<std::pair<double, double>> sweep; // (radius, integral so far)
};

/// Total curvature as -(integral of Delta log ||G_z||) over an exhausting
/// sweep; the density is the exact Fubini-Study pullback of the compiled
/// components, so only the domain integral is numerical.
TotalCurvatureReport total_curvature(const MinimalSurface& s, double r_max = 1.0e4,
                                     double tol = 1e-7);

struct BoundReport {
    int N = 0, k = 0, d = 1, M = 0, q = 0;
    Rat B1{0};          // (2N-k+1)(M+1)/(k+1) + (2N-k+1)M(M+1)/(2d(k+1))
    Rat B2{0};          // the /d variant
    Rat B1_product{0};  // (2N-k+1)(M+1)(M+2d)/(2d(k+1))
    bool forms_agree = false; // B1 == B1_product, exact
};

BoundReport bound_evaluator(int N, int k, int d, int M, int q);

struct RamificationWitness {
    bool verified = false;       // every zero order >= m_j held exactly
    bool exact = false;          // polynomial mode
    int min_order = 0;           // 0 means no zeros found (m_j = infinity)
    double lower_bound = 0.0;    // max(0, 1 - M/m_j); 1 when zero-free
    CDouble offending_zero{0, 0};
    std::string note;
};

/// Certified defect lower bound from ramification: zeros of Q(F) on the
/// region must all have order >= m_j.
RamificationWitness ramification_defect_witness(const CurveRep& F,
                                                const HomogeneousPolynomial& Q, int M, int m_j,
                                                double inner, double outer);

struct FtcCriterionReport {
    bool applicable = false; // nondegeneracy certificate
    std::string note;
    std::vector<std::vector<int>> counts; // per hypersurface, per sweep radius
    std::vector<double> sweep_radii;
    bool counts_stabilized = false;
    Rat bound{0};
    bool q_exceeds_bound = false;
    TotalCurvatureReport::Verdict curvature_verdict =
        TotalCurvatureReport::Verdict::InfiniteOrUnknown;
    bool consistent = true; // no (stabilized, q > bound, infinite curvature) row
};

/// Intersection-count sweep for the finite-total-curvature criterion, with a
/// consistency table against the computed total curvature.
FtcCriterionReport finite_total_curvature_criterion(const MinimalSurface& s,
                                                    const PositionConfig& cfg,
                                                    const QuotientBasis& B,
                                                    const std::vector<double>& sweep_radii);

} // namespace vdt
