#pragma once

#include "vdt/nevanlinna.hpp"
#include "vdt/position.hpp"
#include "vdt/wronskian.hpp"

#include <functional>
#include <string>
#include <vector>

namespace vdt {

/// sigma_p = p(p+1)/2 for 0 <= p <= M+1 and tau_m = sum_{p=1}^m sigma_p.
struct ContactConstants {
    int M = 0;
    std::vector<long> sigma; // index 0..M+1
    std::vector<long> tau;   // index 0..M, tau[0] = 0

    explicit ContactConstants(int M_) : M(M_) {
        for (int p = 0; p <= M + 1; ++p) sigma.push_back(static_cast<long>(p) * (p + 1) / 2);
        tau.push_back(0);
        for (int m = 1; m <= M; ++m) tau.push_back(tau[m - 1] + sigma[m]);
    }
};

struct PhiValue {
    double value = 0.0;
    bool excluded = false; // phi_{V,p}(Q)(z) == 0 or degeneracy locus
};

/// Phi_{V,jp} = phi_{V,p+1}(Q) / (phi_{V,p}(Q) log^2(delta / phi_{V,p}(Q))).
PhiValue phi_jp(const DerivedCurveSet& D, const InteriorProduct& ip_p,
                const InteriorProduct& ip_p1, double delta, const CDouble& z);

struct SumToProductResult {
    double C_hat = 0.0; // min over samples of LHS/RHS
    int samples_used = 0;
    int samples_excluded = 0;
    bool pass = false;
};

/// Theorem-3.2-style check: sum_j omega_j Phi_jp >= C (prod Phi_jp^omega)^(1/(M-p)).
SumToProductResult sum_to_product_check(const DerivedCurveSet& D,
                                        const std::vector<std::vector<GaussRat>>& q_coords,
                                        const std::vector<Rat>& omegas, double delta, int p,
                                        const std::vector<CDouble>& samples);

struct DivisorInequalityRow {
    CDouble representative_root;
    int root_class_degree = 0;       // degree of the coprime-basis factor
    int ord_wronskian = 0;           // ord of F_{V,M}
    std::vector<int> ord_q;          // ord of Q_j(F) per j
    Rat lhs{0};                      // nu_phi + sum omega_j min(nu_j, M)
    bool ok = false;
};

struct DivisorInequalityReport {
    bool applicable = true;
    std::string note;
    std::vector<DivisorInequalityRow> rows;
    bool pass = true;
};

/// Theorem-3.5 exact check at every zero class of prod Q_j(F); polynomial
/// curve components only (exact orders via square-free/coprime factoring).
DivisorInequalityReport divisor_inequality_check(const CurveRep& F, const PositionConfig& cfg,
                                                 const NochkaWeights& w, const QuotientBasis& B);

struct SchwarzCheckResult {
    double worst_ratio = 0.0; // max v(z) / (2R/(R^2-|z|^2))
    bool pass = false;
};

/// Lemma-3.6 bound v(z) <= 2R/(R^2-|z|^2) verified pointwise on samples.
SchwarzCheckResult schwarz_bound_check(const std::function<double(const CDouble&)>& v, double R,
                                       const std::vector<CDouble>& samples,
                                       double rel_tol = 1e-9);

/// Main-Lemma data: per-hypersurface exponents eta_j, certified weights, a
/// rational epsilon, and the derived gamma/rho/rho* numbers.
struct MainLemmaParams {
    std::vector<double> eta_j;
    std::vector<Rat> omegas;
    double epsilon = 0.0;
    int M = 0;
    int d = 1;

    double gamma() const {
        double s = 0.0;
        for (std::size_t j = 0; j < eta_j.size(); ++j)
            s += omegas[j].get_d() * (1.0 - eta_j[j]);
        return s - M - 1;
    }
};

struct MainLemmaDerived {
    double h = 0.0;
    double rho = 0.0;
    double rho_star = 0.0;
    bool rho_in_range = false; // 0 < rho < 1, implied by h > sigma_M + eps tau_M
};
MainLemmaDerived main_lemma_rho(const MainLemmaParams& p);

struct MainLemmaResult {
    bool refused = false;
    std::string refusal;
    std::vector<CDouble> samples;
    std::vector<double> log_eta;
    std::vector<double> log_bound_shape; // (sigma_M + eps tau_M) log(2R/(R^2-|z|^2))
    double C_fit = 0.0;                  // fitted on the inner calibration half
    bool bound_pass = false;
};

/// eta of the Main Lemma evaluated in log space on disk samples, paired with
/// the Schwarz-shaped bound C (2R/(R^2-|z|^2))^{sigma_M + eps tau_M};
/// log_k_j supplies log k_j (identically 0 for the k_j == 1 witnesses).
MainLemmaResult main_lemma_eta(const DerivedCurveSet& D, const PositionConfig& cfg,
                               const MainLemmaParams& params,
                               const std::vector<std::function<double(const CDouble&)>>& log_k_j,
                               double R, const std::vector<CDouble>& samples);

struct CurvatureCheckResult {
    int points = 0;
    int passed = 0;
    double pass_fraction = 0.0;
    bool pass = false;
    bool inconclusive = false;
    double median_tol = 0.0;
    std::vector<CDouble> failures;
};

/// Five-point Laplacian check: Delta log(lambda) >= C lambda^2 - tol at >= 99%
/// of interior grid points; h vs h/2 Richardson gives the tolerance.
CurvatureCheckResult curvature_negativity_check(
    const std::function<double(const CDouble&)>& log_lambda, const std::vector<CDouble>& grid,
    double h, double C_candidate);

struct DerivedNormRow {
    CDouble z;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool ok = false;
};

struct DerivedNormReport {
    std::vector<DerivedNormRow> rows;
    bool pass = true;
    bool inconclusive = false;
};

/// Theorem-3.4 check: dd^c log(prod_{p<M} |F_p|^2) against the tau/sigma
/// density, with dd^c|z|^2 normalized to 1 (so dd^c u == Delta u / 4).
DerivedNormReport derived_norm_inequality_check(const DerivedCurveSet& D,
                                                const std::vector<CDouble>& samples, double h);

/// Rectangular sample grid on a disk, excluding points near a predicate.
std::vector<CDouble> disk_samples(double R, int per_side,
                                  const std::function<bool(const CDouble&)>& exclude = nullptr,
                                  double boundary_margin = 0.05);

} // namespace vdt
