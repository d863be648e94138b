#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>

namespace vdt {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

struct ComplexQuadResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

/// Adaptive composite Gauss-Legendre on [a, b]. A panel is accepted when the
/// 16-point rule agrees with its bisection within the local tolerance share
/// (Richardson-style difference as the error estimate).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol = 1e-10, int max_depth = 24,
                              std::size_t max_evals = 1000000, int initial_splits = 1);

ComplexQuadResult integrate_adaptive_complex(const std::function<std::complex<double>(double)>& f,
                                             double a, double b, double abs_tol = 1e-10,
                                             int max_depth = 24, std::size_t max_evals = 1000000,
                                             int initial_splits = 1);

/// Mean value over a circle: (1/2pi) * int_0^{2pi} g(theta) dtheta.
QuadResult circle_mean(const std::function<double(double)>& g, double abs_tol = 1e-10);

} // namespace vdt
