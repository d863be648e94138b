#include "vdt/metric.hpp"

#include <algorithm>
#include <cmath>

namespace vdt {

PhiValue phi_jp(const DerivedCurveSet& D, const InteriorProduct& ip_p,
                const InteriorProduct& ip_p1, double delta, const CDouble& z) {
    if (!(delta > 1.0)) throw std::invalid_argument("phi_jp: delta must exceed 1");
    PhiValue out;
    auto cp = contact_function(D, ip_p.p, ip_p, z);
    auto cp1 = contact_function(D, ip_p1.p, ip_p1, z);
    if (cp.degenerate || cp1.degenerate || cp.value <= 0.0) {
        out.excluded = true;
        return out;
    }
    double lg = std::log(delta / cp.value);
    out.value = cp1.value / (cp.value * lg * lg);
    return out;
}

SumToProductResult sum_to_product_check(const DerivedCurveSet& D,
                                        const std::vector<std::vector<GaussRat>>& q_coords,
                                        const std::vector<Rat>& omegas, double delta, int p,
                                        const std::vector<CDouble>& samples) {
    if (p < 0 || p > D.M() - 1)
        throw std::invalid_argument("sum_to_product_check: need 0 <= p <= M-1");
    const std::size_t q = q_coords.size();
    std::vector<InteriorProduct> ips_p, ips_p1;
    for (const auto& a : q_coords) {
        ips_p.push_back(interior_product_against(D, p, a));
        ips_p1.push_back(interior_product_against(D, p + 1, a));
    }
    SumToProductResult out;
    out.C_hat = std::numeric_limits<double>::infinity();
    for (const auto& z : samples) {
        double lhs = 0.0;
        double logprod = 0.0;
        bool excluded = false;
        for (std::size_t j = 0; j < q && !excluded; ++j) {
            auto phi = phi_jp(D, ips_p[j], ips_p1[j], delta, z);
            if (phi.excluded || phi.value <= 0.0) {
                excluded = true;
                break;
            }
            double w = omegas[j].get_d();
            lhs += w * phi.value;
            logprod += w * std::log(phi.value);
        }
        if (excluded) {
            ++out.samples_excluded;
            continue;
        }
        double rhs = std::exp(logprod / (D.M() - p));
        out.C_hat = std::min(out.C_hat, lhs / rhs);
        ++out.samples_used;
    }
    if (out.samples_used == 0)
        throw std::runtime_error("sum_to_product_check: empty sample set after exclusions");
    out.pass = out.C_hat > 0.0;
    return out;
}

DivisorInequalityReport divisor_inequality_check(const CurveRep& F, const PositionConfig& cfg,
                                                 const NochkaWeights& w, const QuotientBasis& B) {
    DivisorInequalityReport rep;
    for (const auto& c : F.components)
        if (!c.is_polynomial()) {
            rep.applicable = false;
            rep.note = "restricted mode: exact orders need polynomial components";
            return rep;
        }
    DerivedCurveSet D(F, B);
    if (!D.nondegenerate()) {
        rep.applicable = false;
        rep.note = "degenerate curve: F_{V,M} vanishes identically";
        return rep;
    }
    const int M = B.M();
    ExpPoly top = D.subset_wronskian((1u << (M + 1)) - 1);
    GPoly W = top.polynomial();

    std::vector<GPoly> qf;
    for (const auto& Q : cfg.lifted) {
        ExpPoly e = compose_with_polynomial(Q, F);
        if (e.is_zero()) {
            rep.applicable = false;
            rep.note = "Q_j(F) == 0: curve lies on a configured hypersurface";
            return rep;
        }
        qf.push_back(e.polynomial());
    }

    std::vector<GPoly> all = qf;
    all.push_back(W);
    auto basis = coprime_basis(all);

    for (const auto& g : basis) {
        DivisorInequalityRow row;
        row.root_class_degree = g.degree();
        row.ord_wronskian = W.degree() > 0 ? multiplicity_of_factor(W, g) : 0;
        bool on_q_zero = false;
        Rat nu_phi(row.ord_wronskian);
        Rat min_term(0);
        for (std::size_t j = 0; j < qf.size(); ++j) {
            int e = qf[j].degree() > 0 ? multiplicity_of_factor(qf[j], g) : 0;
            row.ord_q.push_back(e);
            if (e > 0) on_q_zero = true;
            nu_phi -= w.omegas[j] * e;
            min_term += w.omegas[j] * std::min(e, M);
        }
        if (!on_q_zero) continue; // theorem constrains zeros of prod Q_j(F)
        row.lhs = nu_phi + min_term;
        row.ok = row.lhs >= 0;
        auto roots = isolate_polynomial_roots(g);
        if (!roots.empty()) row.representative_root = roots[0].z;
        rep.pass = rep.pass && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

SchwarzCheckResult schwarz_bound_check(const std::function<double(const CDouble&)>& v, double R,
                                       const std::vector<CDouble>& samples, double rel_tol) {
    SchwarzCheckResult out;
    for (const auto& z : samples) {
        double bound = 2.0 * R / (R * R - std::norm(z));
        out.worst_ratio = std::max(out.worst_ratio, v(z) / bound);
    }
    out.pass = out.worst_ratio <= 1.0 + rel_tol;
    return out;
}

MainLemmaDerived main_lemma_rho(const MainLemmaParams& p) {
    ContactConstants cc(p.M);
    MainLemmaDerived out;
    const std::size_t q = p.eta_j.size();
    double sum_eta_over_q = 0.0;
    for (double e : p.eta_j) sum_eta_over_q += e / q;
    out.h = p.d * p.gamma() - p.epsilon * (p.d * cc.sigma[p.M + 1] + p.d * sum_eta_over_q);
    double smet = cc.sigma[p.M] + p.epsilon * cc.tau[p.M];
    out.rho = smet / out.h;
    out.rho_star = 1.0 / ((1.0 - out.rho) * out.h);
    out.rho_in_range = out.h > smet && out.rho > 0.0 && out.rho < 1.0;
    return out;
}

MainLemmaResult main_lemma_eta(const DerivedCurveSet& D, const PositionConfig& cfg,
                               const MainLemmaParams& params,
                               const std::vector<std::function<double(const CDouble&)>>& log_k_j,
                               double R, const std::vector<CDouble>& samples) {
    MainLemmaResult out;
    const int M = D.M();
    const std::size_t q = cfg.lifted.size();
    ContactConstants cc(M);
    double sum_eta_over_q = 0.0;
    for (double e : params.eta_j) sum_eta_over_q += e / q;
    double gamma = params.gamma();
    if (!(gamma > params.epsilon * (cc.sigma[M + 1] + sum_eta_over_q))) {
        out.refused = true;
        out.refusal = "hypothesis violated: gamma <= epsilon (sigma_{M+1} + sum eta_j / q)";
        return out;
    }

    // interior products for every (j, p <= M-1)
    std::vector<std::vector<InteriorProduct>> ip(q);
    for (std::size_t j = 0; j < q; ++j)
        for (int p = 0; p <= M - 1; ++p)
            ip[j].push_back(interior_product_against(D, p, cfg.lifted[j]));

    std::vector<ExpPoly> qf;
    for (const auto& Q : cfg.lifted) qf.push_back(compose_with_polynomial(Q, D.base()));

    CompiledCurve base(D.base());
    double exp0 = gamma - params.epsilon * (cc.sigma[M + 1] + sum_eta_over_q);
    double power = cc.sigma[M] + params.epsilon * cc.tau[M];

    for (const auto& z : samples) {
        double log_eta = exp0 * D.log_norm(0, z);
        log_eta += (1.0 + params.epsilon) * D.log_norm(M, z);
        double log_F = base.log_norm(z);
        for (std::size_t j = 0; j < q; ++j) {
            double log_h = log_k_j[j](z) + cfg.d * params.eta_j[j] * log_F;
            log_eta += (params.omegas[j].get_d() + params.epsilon / q) * log_h;
            for (int p = 0; p <= M - 1; ++p)
                log_eta += (params.epsilon / q) * ip[j][p].log_norm(z);
            log_eta -= params.omegas[j].get_d() * qf[j].log_abs(z);
        }
        out.samples.push_back(z);
        out.log_eta.push_back(log_eta);
        out.log_bound_shape.push_back(power * std::log(2.0 * R / (R * R - std::norm(z))));
    }

    // fit C away from the boundary fringe; the non-vacuous content of the
    // bound is that eta/shape stays dominated as |z| -> R, so verify there
    double rmax = 0.0;
    for (const auto& z : out.samples) rmax = std::max(rmax, std::abs(z));
    double split = 0.85 * rmax;
    double log_c = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        if (std::abs(out.samples[i]) <= split)
            log_c = std::max(log_c, out.log_eta[i] - out.log_bound_shape[i]);
    out.C_fit = std::exp(log_c);
    out.bound_pass = true;
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        if (out.log_eta[i] > log_c + out.log_bound_shape[i] + 1e-9) out.bound_pass = false;
    return out;
}

CurvatureCheckResult curvature_negativity_check(
    const std::function<double(const CDouble&)>& log_lambda, const std::vector<CDouble>& grid,
    double h, double C_candidate) {
    CurvatureCheckResult out;
    auto laplacian = [&](const CDouble& z, double hh) {
        return (log_lambda(z + CDouble{hh, 0}) + log_lambda(z - CDouble{hh, 0}) +
                log_lambda(z + CDouble{0, hh}) + log_lambda(z - CDouble{0, hh}) -
                4.0 * log_lambda(z)) /
               (hh * hh);
    };
    std::vector<double> tols;
    double signal = 0.0;
    for (const auto& z : grid) {
        double full = laplacian(z, h);
        double half = laplacian(z, 0.5 * h);
        double err = std::abs(half - full) / 3.0; // O(h^2) Richardson
        double tol = 10.0 * err + 1e-9;
        double lam2 = std::exp(2.0 * log_lambda(z));
        ++out.points;
        tols.push_back(tol);
        signal = std::max(signal, std::abs(half) + std::abs(C_candidate * lam2));
        if (half >= C_candidate * lam2 - tol)
            ++out.passed;
        else
            out.failures.push_back(z);
    }
    if (out.points == 0) {
        out.inconclusive = true;
        return out;
    }
    std::nth_element(tols.begin(), tols.begin() + tols.size() / 2, tols.end());
    out.median_tol = tols[tols.size() / 2];
    out.pass_fraction = static_cast<double>(out.passed) / out.points;
    if (out.median_tol > 0.5 * signal) {
        out.inconclusive = true;
        return out;
    }
    out.pass = out.pass_fraction >= 0.99;
    return out;
}

DerivedNormReport derived_norm_inequality_check(const DerivedCurveSet& D,
                                                const std::vector<CDouble>& samples, double h) {
    DerivedNormReport rep;
    const int M = D.M();
    ContactConstants cc(M);
    auto u = [&](const CDouble& z) {
        double s = 0.0;
        for (int p = 0; p <= M - 1; ++p) s += 2.0 * D.log_norm(p, z);
        return s;
    };
    auto lap = [&](const CDouble& z, double hh) {
        return (u(z + CDouble{hh, 0}) + u(z - CDouble{hh, 0}) + u(z + CDouble{0, hh}) +
                u(z - CDouble{0, hh}) - 4.0 * u(z)) /
               (hh * hh);
    };
    for (const auto& z : samples) {
        DerivedNormRow row;
        row.z = z;
        double full = lap(z, h);
        double half = lap(z, 0.5 * h);
        double tol = 10.0 * std::abs(half - full) / 3.0 + 1e-9;
        row.lhs = half / 4.0; // dd^c with dd^c|z|^2 == 1
        double le = 0.0;
        for (int p = 0; p <= M; ++p) le += 2.0 * D.log_norm(p, z);
        le -= 2.0 * cc.sigma[M + 1] * D.log_norm(0, z);
        row.rhs = (static_cast<double>(cc.tau[M]) / cc.sigma[M]) * std::exp(le / cc.tau[M]);
        row.margin = row.lhs - row.rhs;
        row.ok = row.margin >= -tol;
        rep.pass = rep.pass && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<CDouble> disk_samples(double R, int per_side,
                                  const std::function<bool(const CDouble&)>& exclude,
                                  double boundary_margin) {
    std::vector<CDouble> out;
    double lim = R * (1.0 - boundary_margin);
    for (int i = 0; i < per_side; ++i)
        for (int j = 0; j < per_side; ++j) {
            double x = -lim + 2.0 * lim * (i + 0.5) / per_side;
            double y = -lim + 2.0 * lim * (j + 0.5) / per_side;
            CDouble z{x, y};
            if (std::abs(z) >= lim) continue;
            if (exclude && exclude(z)) continue;
            out.push_back(z);
        }
    return out;
}

} // namespace vdt
