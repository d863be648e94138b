#pragma once

#include "vdt/exppoly.hpp"

#include <string>
#include <vector>

namespace vdt {

struct IsolatedRoot {
    CDouble z;
    int multiplicity = 1;
    double inclusion_radius = 0.0; // certified: a root lies within this disk
};

/// All complex roots with multiplicities via square-free decomposition and
/// Aberth-Ehrlich iteration; inclusion radii are a posteriori Newton bounds.
std::vector<IsolatedRoot> isolate_polynomial_roots(const GPoly& p);

struct ZeroSearchReport {
    Divisor divisor;
    double s_used = 0.0;
    double t_used = 0.0;
    bool radii_perturbed = false;
    double max_winding_residual = 0.0; // worst |contour count - nearest integer|
    bool polynomial_mode = false;
    bool cross_checked = false; // polynomial isolation vs argument principle
    std::string diagnostics;
};

/// Zero divisor of f on the annulus s <= |z| <= t. Counts come from
/// argument-principle contour integrals; locations from recursive sector
/// subdivision plus Newton polish. Pure polynomials are additionally
/// cross-checked against certified root isolation.
ZeroSearchReport zeros_on_annulus(const ExpPoly& f, double s, double t);

/// Winding number (zero count) of f on |z| <= r ... minus ... |z| < s, via
/// (1/2pi i) contour integrals of f'/f; throws on persistent non-integer
/// contour values (boundary zero or precision failure).
int count_zeros_annulus(const CompiledExpPoly& f, const CompiledExpPoly& fp, double s, double t);

/// Common-zero certificate for a curve representation: samples zeros of the
/// first nonzero component on a probe annulus and checks the others there;
/// polynomial tuples additionally get an exact gcd certificate.
struct ReducedCertificate {
    bool reduced = true;
    CDouble common_zero{0.0, 0.0}; // witness when reduced == false
    bool exact = false;            // true when backed by polynomial gcd
    std::string note;
};
ReducedCertificate certify_reduced(const CurveRep& F, double probe_inner = 0.0,
                                   double probe_outer = 0.0);

} // namespace vdt
