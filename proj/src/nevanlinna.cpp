#include "vdt/nevanlinna.hpp"

#include "vdt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vdt {

RadiusGrid RadiusGrid::geometric(double s, double r0, double r1, int count) {
    if (!(s > 0) || !(r0 > s) || !(r1 > r0) || count < 2)
        throw std::invalid_argument("RadiusGrid: need s < r0 < r1 and count >= 2");
    RadiusGrid g;
    g.s = s;
    double step = std::pow(r1 / r0, 1.0 / (count - 1));
    double r = r0;
    for (int i = 0; i < count; ++i) {
        g.radii.push_back(r);
        r *= step;
    }
    g.radii.back() = r1;
    return g;
}

std::vector<std::size_t> RadiusGrid::tail_indices() const {
    std::vector<std::size_t> idx;
    std::size_t start = radii.size() - radii.size() / 3;
    if (start >= radii.size()) start = radii.size() > 0 ? radii.size() - 1 : 0;
    for (std::size_t i = start; i < radii.size(); ++i) idx.push_back(i);
    return idx;
}

double counting_function(const Divisor& nu, double r, double s, int truncation) {
    if (!(r > s)) throw std::invalid_argument("counting_function: need r > s");
    if (truncation < 1) throw std::invalid_argument("counting_function: truncation >= 1");
    double acc = 0.0;
    for (const auto& p : nu.support) {
        double rho = std::abs(p.z);
        if (rho > r) continue;
        int m = std::min(p.multiplicity, truncation);
        acc += m * std::log(r / std::max(rho, s));
    }
    return acc;
}

namespace {

// circle means retry on perturbed radii when a singularity pins the circle
constexpr double kPerturbLadder[] = {0.0, 1e-9, 1e-7, 1e-5, 1e-3};

CircleIntegral circle_log_plus_ratio(const CompiledExpPoly& num, const CompiledExpPoly& den,
                                     double r) {
    for (int attempt = 0; attempt < 5; ++attempt) {
        double rr = r * (1.0 + kPerturbLadder[attempt]);
        auto res = circle_mean(
            [&](double th) {
                CDouble z = std::polar(rr, th);
                double v = num.log_abs(z) - den.log_abs(z);
                return std::max(0.0, v);
            },
            1e-10);
        if (res.converged && std::isfinite(res.value)) return {res.value, res.error_estimate, rr};
    }
    throw std::runtime_error("proximity: pole/zero pinned to the circle after perturbation");
}

CircleIntegral circle_log_norm(const CompiledCurve& F, double r) {
    for (int attempt = 0; attempt < 5; ++attempt) {
        double rr = r * (1.0 + kPerturbLadder[attempt]);
        auto res = circle_mean([&](double th) { return F.log_norm(std::polar(rr, th)); }, 1e-10);
        if (res.converged && std::isfinite(res.value)) return {res.value, res.error_estimate, rr};
    }
    throw std::runtime_error("characteristic: log-norm quadrature failed");
}

} // namespace

ProximityResult proximity(const ExpPoly& num, const ExpPoly& den, double r, double s) {
    if (den.is_zero()) throw std::invalid_argument("proximity: zero denominator");
    if (!(r > s)) throw std::invalid_argument("proximity: need r > s");
    auto cn = compile(num);
    auto cd = compile(den);
    auto at_r = circle_log_plus_ratio(cn, cd, r);
    auto at_s = circle_log_plus_ratio(cn, cd, s);
    return {at_r.value - at_s.value, at_r.quad_error + at_s.quad_error};
}

double characteristic(const CompiledCurve& F, double r, double s, double* quad_error) {
    if (!(r > s)) throw std::invalid_argument("characteristic: need r > s");
    auto at_r = circle_log_norm(F, r);
    auto at_s = circle_log_norm(F, s);
    if (quad_error) *quad_error = at_r.quad_error + at_s.quad_error;
    return at_r.value - at_s.value;
}

double characteristic(const CurveRep& F, double r, double s) {
    CompiledCurve c(F);
    return characteristic(c, r, s);
}

FunctionCurveComparison function_vs_curve_characteristic(const ExpPoly& num, const ExpPoly& den,
                                                         const RadiusGrid& grid,
                                                         double drift_bound) {
    FunctionCurveComparison out;
    ExpPoly n = num, d = den;
    if (n.is_polynomial() && d.is_polynomial() && !n.is_zero() && !d.is_zero()) {
        GPoly g = gcd(n.polynomial(), d.polynomial());
        if (g.degree() > 0) {
            n = ExpPoly::from_poly(*n.polynomial().divide_exact(g));
            d = ExpPoly::from_poly(*d.polynomial().divide_exact(g));
            out.reduced_common_factor = true;
        }
    }
    // N_{1/phi}: zeros of the denominator over the whole grid span
    double top = grid.radii.back() * (1.0 + 1e-6);
    Divisor poles;
    if (!d.is_polynomial() || d.polynomial().degree() > 0)
        poles = zeros_on_annulus(d, grid.s, top).divisor;

    CurveRep curve{{d, n}, Region::punctured_disk(grid.s), {}};
    CompiledCurve cc(curve);
    auto cn = compile(n);
    auto cd = compile(d);
    auto m_at = [&](double r) { return circle_log_plus_ratio(cn, cd, r).value; };
    double m_s = m_at(grid.s);
    for (double r : grid.radii) {
        double m = m_at(r) - m_s;
        double Nphi = counting_function(poles, r, grid.s);
        double tf = m + Nphi;
        double tc = characteristic(cc, r, grid.s);
        out.radii.push_back(r);
        out.t_function.push_back(tf);
        out.t_curve.push_back(tc);
        out.difference.push_back(tf - tc);
    }
    // drift over the top decade
    double rmax = grid.radii.back();
    double lo = rmax / 10.0;
    double dmin = std::numeric_limits<double>::infinity(), dmax = -dmin;
    for (std::size_t i = 0; i < out.radii.size(); ++i) {
        if (out.radii[i] < lo) continue;
        dmin = std::min(dmin, out.difference[i]);
        dmax = std::max(dmax, out.difference[i]);
    }
    out.drift_top_decade = dmax - dmin;
    out.bounded = out.drift_top_decade < drift_bound;
    return out;
}

LogDerivativeReport log_derivative_measurement(const CurveRep& F, int k, const RadiusGrid& grid) {
    if (k < 1) throw std::invalid_argument("log_derivative_measurement: k >= 1");
    LogDerivativeReport rep;
    rep.radii = grid.radii;
    CompiledCurve cc(F);
    std::vector<double> logT;
    for (double r : grid.radii)
        logT.push_back(std::log(std::max(1.0, characteristic(cc, r, grid.s))));

    for (std::size_t ci = 0; ci < F.components.size(); ++ci) {
        const auto& f = F.components[ci];
        if (f.is_zero()) continue;
        LogDerivativeReport::ComponentFit fit;
        fit.component = static_cast<int>(ci);
        auto cn = compile(differentiate(f, k));
        auto cd = compile(f);
        double m_s = circle_log_plus_ratio(cn, cd, grid.s).value;
        for (double r : grid.radii)
            fit.measured.push_back(circle_log_plus_ratio(cn, cd, r).value - m_s);

        // least squares for c1 log+T + c2 log r + c3 on the first two thirds
        std::size_t ntrain = grid.radii.size() - grid.radii.size() / 3;
        double A[3][3] = {{0}}, rhs[3] = {0};
        for (std::size_t i = 0; i < ntrain; ++i) {
            double x[3] = {logT[i], std::log(grid.radii[i]), 1.0};
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) A[a][b] += x[a] * x[b];
                rhs[a] += x[a] * fit.measured[i];
            }
        }
        for (int a = 0; a < 3; ++a) A[a][a] += 1e-12;
        // solve 3x3 by Cramer-free elimination
        double M[3][4];
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) M[a][b] = A[a][b];
            M[a][3] = rhs[a];
        }
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int r2 = col + 1; r2 < 3; ++r2)
                if (std::abs(M[r2][col]) > std::abs(M[piv][col])) piv = r2;
            std::swap(M[col], M[piv]);
            for (int r2 = 0; r2 < 3; ++r2) {
                if (r2 == col || M[col][col] == 0.0) continue;
                double fct = M[r2][col] / M[col][col];
                for (int c2 = col; c2 < 4; ++c2) M[r2][c2] -= fct * M[col][c2];
            }
        }
        fit.c1 = M[0][3] / M[0][0];
        fit.c2 = M[1][3] / M[1][1];
        fit.c3 = M[2][3] / M[2][2];

        double scale = 0.0;
        for (double m : fit.measured) scale = std::max(scale, std::abs(m));
        double slack = 0.5 + 0.1 * scale;
        fit.holdout_ok = true;
        for (std::size_t i = 0; i < grid.radii.size(); ++i) {
            double pred = fit.c1 * logT[i] + fit.c2 * std::log(grid.radii[i]) + fit.c3;
            fit.predicted.push_back(pred);
            if (i >= ntrain && fit.measured[i] > pred + slack) fit.holdout_ok = false;
        }
        rep.fits.push_back(std::move(fit));
    }
    return rep;
}

SingularityReport essential_singularity_test(const CurveRep& F, const RadiusGrid& grid) {
    SingularityReport rep;
    CompiledCurve cc(F);
    for (double r : grid.radii)
        rep.ratios.push_back(characteristic(cc, r, grid.s) / std::log(r / grid.s));
    auto tail = grid.tail_indices();
    double tmin = std::numeric_limits<double>::infinity(), tmax = -tmin;
    for (auto i : tail) {
        tmin = std::min(tmin, rep.ratios[i]);
        tmax = std::max(tmax, rep.ratios[i]);
    }
    rep.tail_estimate = tmin; // liminf estimate
    bool increasing = true;
    for (std::size_t j = 1; j < tail.size(); ++j)
        increasing = increasing && rep.ratios[tail[j]] >= rep.ratios[tail[j - 1]] - 1e-9;
    double span = tmax - std::max(tmin, 0.0);
    if (tmax <= 0.05) {
        rep.verdict = SingularityVerdict::Extends; // bounded curve
    } else if (span <= 0.15 * std::max(1.0, std::abs(tmax))) {
        rep.verdict = SingularityVerdict::Extends;
    } else if (increasing && tmax >= 1.5 * std::max(tmin, 1e-12)) {
        rep.verdict = SingularityVerdict::Essential;
    } else {
        rep.verdict = SingularityVerdict::Inconclusive;
    }
    return rep;
}

SmtReport smt_verify(const CurveRep& F, const PositionConfig& cfg, const QuotientBasis& B,
                     const RadiusGrid& grid, double eps_slack) {
    SmtReport rep;
    rep.eps_slack = eps_slack;

    DerivedCurveSet D(F, B);
    if (!D.nondegenerate()) {
        rep.refused = true;
        rep.refusal_reason = "curve degenerate over I_d(V): basis Wronskian vanishes identically";
        rep.degeneracy_witness = D.degeneracy_witness();
        return rep;
    }

    const int M = B.M();
    Rat coeff = Rat(cfg.q) - Rat(2 * cfg.N - cfg.k + 1) * Rat(M + 1) / Rat(cfg.k + 1);
    rep.coefficient = coeff.get_d();

    // zero divisors of the original-degree compositions, one search each
    double top = grid.radii.back() * (1.0 + 1e-6);
    std::vector<Divisor> divisors;
    for (const auto& Q : cfg.originals) {
        ExpPoly qf = compose_with_polynomial(Q, F);
        if (qf.is_zero())
            throw std::logic_error("smt_verify: Q(F) == 0 for a nondegenerate curve");
        bool constant = qf.is_polynomial() && qf.polynomial().degree() <= 0;
        Divisor dv;
        dv.region = Region::annulus(grid.s, top);
        if (!constant) dv = zeros_on_annulus(qf, grid.s, top).divisor;
        divisors.push_back(std::move(dv));
    }

    CompiledCurve cc(F);
    auto tails = grid.tail_indices();
    rep.min_tail_margin_over_T = std::numeric_limits<double>::infinity();
    for (double r : grid.radii) {
        SmtRow row;
        row.r = r;
        row.T = characteristic(cc, r, grid.s);
        row.lhs = rep.coefficient * row.T;
        row.rhs = 0.0;
        for (int i = 0; i < cfg.q; ++i) {
            double n = counting_function(divisors[i], r, grid.s, M);
            row.N_full.push_back(counting_function(divisors[i], r, grid.s));
            row.N_trunc.push_back(n);
            row.rhs += n / cfg.original_degrees[i];
        }
        row.margin = row.rhs - row.lhs;
        row.margin_over_T = row.T > 1e-9 ? row.margin / row.T : 0.0;
        rep.rows.push_back(std::move(row));
    }
    for (auto i : tails)
        rep.min_tail_margin_over_T = std::min(rep.min_tail_margin_over_T,
                                              rep.rows[i].margin_over_T);
    rep.pass = rep.min_tail_margin_over_T >= -eps_slack;
    return rep;
}

DefectResult truncated_defect(const CurveRep& F, const HomogeneousPolynomial& Q,
                              const QuotientBasis& B, const RadiusGrid& grid) {
    DefectResult out;
    CompiledCurve cc(F);
    // meaningfulness guard: T must be unbounded; constant curves are rejected
    double t_last = characteristic(cc, grid.radii.back(), grid.s);
    double t_first = characteristic(cc, grid.radii.front(), grid.s);
    if (t_last < 0.05 || t_last < 1.05 * t_first) {
        out.defined = false;
        out.note = "extendable/bounded characteristic: defect undefined";
        return out;
    }
    ExpPoly qf = compose_with_polynomial(Q, F);
    if (qf.is_zero()) {
        out.defined = false;
        out.note = "Q(F) identically zero (degenerate direction)";
        return out;
    }
    double top = grid.radii.back() * (1.0 + 1e-6);
    bool constant = qf.is_polynomial() && qf.polynomial().degree() <= 0;
    Divisor dv;
    dv.region = Region::annulus(grid.s, top);
    if (!constant) dv = zeros_on_annulus(qf, grid.s, top).divisor;

    const int M = B.M();
    const int dq = Q.degree();
    for (double r : grid.radii) {
        double T = characteristic(cc, r, grid.s);
        double N = counting_function(dv, r, grid.s, M);
        out.ratios.push_back(T > 1e-12 ? N / (dq * T) : 0.0);
    }
    double limsup = 0.0;
    for (auto i : grid.tail_indices()) limsup = std::max(limsup, out.ratios[i]);
    double defect = 1.0 - limsup;
    if (defect < 0.0) {
        defect = 0.0;
        out.clamped = true;
    }
    if (defect > 1.0) {
        defect = 1.0;
        out.clamped = true;
    }
    out.defect = defect;
    return out;
}

DefectSumReport defect_sum_check(const CurveRep& F, const PositionConfig& cfg,
                                 const QuotientBasis& B, const RadiusGrid& grid,
                                 double tolerance) {
    DefectSumReport rep;
    auto sing = essential_singularity_test(F, grid);
    if (sing.verdict != SingularityVerdict::Essential) {
        rep.applicable = false;
        rep.note = sing.verdict == SingularityVerdict::Extends
                       ? "curve extends over infinity; defect sum skipped (EXTENDS)"
                       : "growth inconclusive on this grid";
        return rep;
    }
    rep.applicable = true;
    Rat bound = Rat(2 * cfg.N - cfg.k + 1) * Rat(B.M() + 1) / Rat(cfg.k + 1);
    rep.bound = bound.get_d();
    for (const auto& Q : cfg.originals) {
        auto d = truncated_defect(F, Q, B, grid);
        if (!d.defined) {
            rep.note = "a defect was undefined: " + d.note;
            rep.applicable = false;
            return rep;
        }
        rep.defects.push_back(d.defect);
        rep.sum += d.defect;
    }
    rep.pass = rep.sum <= rep.bound + tolerance;
    return rep;
}

} // namespace vdt
