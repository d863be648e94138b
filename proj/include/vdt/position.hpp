#pragma once

#include "vdt/lp.hpp"
#include "vdt/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vdt {

/// A family of hypersurfaces tested against V, with the common-degree lift
/// Q_i -> Q_i^{d/deg Q_i} applied on ingestion (d = lcm of the degrees).
struct PositionConfig {
    VarietyPresentation V;
    std::vector<HomogeneousPolynomial> originals;
    std::vector<HomogeneousPolynomial> lifted; // all of degree d
    std::vector<int> original_degrees;
    int N = 0;
    int k = 0;
    int d = 1;
    int q = 0;

    static PositionConfig make(VarietyPresentation V,
                               std::vector<HomogeneousPolynomial> hypersurfaces, int N);
};

struct EmptinessResult {
    bool empty = true;
    std::vector<CDouble> witness_ambient; // a common point when nonempty
    std::string note;
};

/// Decide emptiness of V(intersection of the given forms) on V, exactly, for
/// the supported presentations (one-parameter parametrized V; linear-power
/// systems on P^2 with at most one general form on the residual locus).
EmptinessResult common_zero_empty(const VarietyPresentation& V,
                                  const std::vector<HomogeneousPolynomial>& forms);

struct PositionCheckResult {
    bool in_position = false;
    std::vector<int> violating_subset; // when !in_position
    std::vector<CDouble> witness;      // ambient common point
    int subsets_checked = 0;
};

PositionCheckResult check_subgeneral_position(const PositionConfig& cfg);

struct NochkaCertificate {
    bool clause_i = false;   // 0 < omega_i <= 1
    bool clause_ii = false;  // sum = tilde(q-2N+k-1)+k+1, exact
    bool clause_iii = false; // bracket on omega_tilde
    bool clause_iv = false;  // every (N+1)-subset sums <= k+1
    int subsets_checked = 0;
    int refinement_level = 0;
};

struct NochkaWeights {
    std::vector<Rat> omegas;
    Rat omega_tilde{0};
    NochkaCertificate certificate;
};

/// Weights for Lemma-2.3-style bookkeeping, found by bracketing the extreme
/// weight and solving an exact LP; clauses i)-iv) are certified by direct
/// rational arithmetic. Clause v) is checked per query (select_subset_R0).
NochkaWeights nochka_weights(const PositionConfig& cfg);

/// R° of size k+1, full rank among the classes, with
/// prod_{i in R} E_i^{omega_i} <= prod_{i in R°} E_i; exhaustive search.
std::vector<int> select_subset_R0(const NochkaWeights& w, const PositionConfig& cfg,
                                  const QuotientBasis& B, const std::vector<int>& R,
                                  const std::vector<double>& E);

struct NormComparability {
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    int samples = 0;
};

/// Empirical Lemma-2.5 constants over sampled points of V:
/// alpha_hat = min over samples of max_i |Q_i(x)| / ||x||^d, beta_hat = max.
NormComparability norm_comparability(const PositionConfig& cfg, const std::vector<int>& R,
                                     int n_samples, unsigned long seed = 1);

/// Deterministic sample points on V through its parametrization.
std::vector<std::vector<CDouble>> sample_points_on_variety(const VarietyPresentation& V,
                                                           int count, unsigned long seed);

} // namespace vdt
