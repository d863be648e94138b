#include "vdt/gauss.hpp"

#include "vdt/quadrature.hpp"
#include "vdt/wronskian.hpp"
#include "vdt/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vdt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GaussRat half() { return GaussRat(rat(1, 2)); }
GaussRat ihalf() { return GaussRat(rat(0), rat(1, 2)); }

} // namespace

ExpPoly MinimalSurface::minimality_quadric() const {
    ExpPoly acc;
    for (const auto& c : dz) acc = acc + c * c;
    return acc;
}

MinimalSurface MinimalSurface::plane() {
    MinimalSurface s;
    s.name = "plane";
    s.dz = {ExpPoly::constant(half()), ExpPoly::constant(GaussRat(rat(0), rat(-1, 2))),
            ExpPoly::zero()};
    s.chart = Chart::Plane;
    s.known_total_curvature = 0.0;
    return s;
}

MinimalSurface MinimalSurface::enneper() {
    // Weierstrass (f, g) = (1, z): G = ((1-z^2)/2, i(1+z^2)/2, z)
    MinimalSurface s;
    s.name = "enneper";
    auto z2 = GPoly{GaussRat(1), GaussRat(0), GaussRat(-1)}; // 1 - z^2
    auto z2p = GPoly{GaussRat(1), GaussRat(0), GaussRat(1)}; // 1 + z^2
    s.dz = {ExpPoly::from_poly(half() * z2), ExpPoly::from_poly(ihalf() * z2p), ExpPoly::z()};
    s.chart = Chart::Plane;
    s.known_total_curvature = -4.0 * std::numbers::pi;
    return s;
}

MinimalSurface MinimalSurface::catenoid() {
    // exponential chart: x = (Re cosh z, Re(-i sinh z), Re z)
    MinimalSurface s;
    s.name = "catenoid";
    auto e1 = ExpPoly::exp(GaussRat(1));
    auto em1 = ExpPoly::exp(GaussRat(-1));
    GaussRat quarter(rat(1, 4));
    GaussRat iquarter(rat(0), rat(-1, 4));
    // sinh z / 2, -i cosh z / 2, 1/2
    s.dz = {quarter * e1 - quarter * em1, iquarter * e1 + iquarter * em1,
            ExpPoly::constant(half())};
    s.chart = Chart::Cylinder;
    s.known_total_curvature = -4.0 * std::numbers::pi;
    return s;
}

MinimalSurface MinimalSurface::helicoid() {
    // conjugate surface of the catenoid on the whole plane (universal cover)
    MinimalSurface s;
    s.name = "helicoid";
    auto cat = catenoid();
    GaussRat i(0, 1);
    for (const auto& c : cat.dz) s.dz.push_back(i * c);
    s.chart = Chart::Plane;
    s.known_total_curvature.reset(); // infinite
    return s;
}

MinimalSurface MinimalSurface::enneper_deg2() {
    MinimalSurface s;
    s.name = "enneper_deg2";
    auto z4 = GPoly{GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(-1)};
    auto z4p = GPoly{GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1)};
    s.dz = {ExpPoly::from_poly(half() * z4), ExpPoly::from_poly(ihalf() * z4p),
            ExpPoly::from_poly(GPoly::monomial(GaussRat(1), 2))};
    s.chart = Chart::Plane;
    s.known_total_curvature = -8.0 * std::numbers::pi;
    return s;
}

const std::vector<std::string>& MinimalSurface::catalogue_names() {
    static const std::vector<std::string> names{"plane", "enneper", "catenoid", "helicoid",
                                                "enneper_deg2"};
    return names;
}

MinimalSurface MinimalSurface::by_name(const std::string& name) {
    if (name == "plane") return plane();
    if (name == "enneper") return enneper();
    if (name == "catenoid") return catenoid();
    if (name == "helicoid") return helicoid();
    if (name == "enneper_deg2") return enneper_deg2();
    throw std::invalid_argument("unknown surface: " + name);
}

CurveRep gauss_map(const MinimalSurface& s, double base_radius) {
    ExpPoly quadric = s.minimality_quadric();
    if (!quadric.is_zero())
        throw std::invalid_argument("gauss_map: non-isothermal data, quadric residue " +
                                    std::to_string(quadric.log_abs({0.3, 0.1})));
    CurveRep F;
    F.components = s.dz;
    F.region = Region::punctured_disk(base_radius);
    // cancel a common polynomial factor when all components are polynomial
    bool all_poly = true;
    for (const auto& c : F.components) all_poly = all_poly && c.is_polynomial();
    if (all_poly) {
        GPoly g;
        bool first = true;
        for (const auto& c : F.components) {
            if (c.is_zero()) continue;
            g = first ? c.polynomial().monic() : gcd(g, c.polynomial());
            first = false;
        }
        if (!first && g.degree() > 0)
            for (auto& c : F.components)
                if (!c.is_zero()) c = ExpPoly::from_poly(*c.polynomial().divide_exact(g));
    }
    if (static_cast<int>(F.components.size()) == 3)
        F.target = VarietyPresentation::minimality_conic();
    return F;
}

MetricDensity induced_metric_density(const MinimalSurface& s, const CDouble& z) {
    double m = -std::numeric_limits<double>::infinity();
    std::vector<double> las;
    for (const auto& c : s.dz) {
        las.push_back(c.is_zero() ? -std::numeric_limits<double>::infinity() : c.log_abs(z));
        m = std::max(m, las.back());
    }
    MetricDensity out;
    if (!std::isfinite(m)) {
        out.branch_point = true;
        return out;
    }
    double acc = 0.0;
    for (double la : las) {
        double d = la - m;
        if (d > -745.0) acc += std::exp(2.0 * d);
    }
    out.value = 2.0 * std::exp(2.0 * m) * acc;
    out.branch_point = out.value <= 0.0;
    return out;
}

namespace {

// Fubini-Study pullback density of the compiled curve: the integrand of the
// curvature integral, scale-invariant so the shared exponential factor drops
double fs_density(const std::vector<CompiledExpPoly>& g, const std::vector<CompiledExpPoly>& gp,
                  const CDouble& z) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& c : g) m = std::max(m, c.scale_at(z));
    for (const auto& c : gp) m = std::max(m, c.scale_at(z));
    CDouble gpv{0, 0};
    double n2 = 0.0, p2 = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        CDouble a = g[i].eval_scaled(z, m);
        CDouble b = gp[i].eval_scaled(z, m);
        n2 += std::norm(a);
        p2 += std::norm(b);
        gpv += b * std::conj(a);
    }
    if (n2 == 0.0) return 0.0;
    double num = n2 * p2 - std::norm(gpv);
    return std::max(0.0, num) / (n2 * n2);
}

} // namespace

TotalCurvatureReport total_curvature(const MinimalSurface& s, double r_max, double tol) {
    TotalCurvatureReport rep;
    std::vector<CompiledExpPoly> g, gp;
    double rate = 0.0;
    for (const auto& c : s.dz) {
        g.push_back(compile(c));
        gp.push_back(compile(c.derivative()));
        for (const auto& t : g.back().terms) rate = std::max(rate, std::abs(t.lambda));
    }
    // FS density times 2 integrates to -total curvature
    const bool cylinder = s.chart == MinimalSurface::Chart::Cylinder;
    auto ring_mean = [&](double t) {
        // plane: mean over the circle |z| = t; cylinder: mean over Re z = ±t
        if (!cylinder) {
            int splits = static_cast<int>(std::min(8192.0, 8.0 + kTwoPi * t * rate));
            auto r = integrate_adaptive(
                [&](double th) { return fs_density(g, gp, std::polar(t, th)); }, 0.0, kTwoPi,
                1e-11 * kTwoPi, 24, 1000000, splits);
            return r.value * t; // line density in the radial variable
        }
        auto r = integrate_adaptive(
            [&](double v) {
                return fs_density(g, gp, {t, v}) + fs_density(g, gp, {-t, v});
            },
            0.0, kTwoPi, 1e-11);
        return r.value;
    };
    double sweep_start = cylinder ? 4.0 : 8.0;
    double r_top = cylinder ? std::min(r_max, 60.0) : r_max;
    double acc = 0.0;
    double prev_edge = 0.0;
    double edge = sweep_start;
    bool converged = false;
    while (true) {
        auto seg = integrate_adaptive([&](double t) { return ring_mean(t); }, prev_edge, edge,
                                      0.25 * tol);
        acc += 2.0 * seg.value;
        rep.sweep.push_back({edge, -acc});
        if (rep.sweep.size() >= 2) {
            double delta = std::abs(rep.sweep.back().second
                                    - rep.sweep[rep.sweep.size() - 2].second);
            if (delta < tol) {
                converged = true;
                break;
            }
        }
        if (edge >= r_top) break;
        prev_edge = edge;
        edge = std::min(r_top, edge * 2.0);
    }
    rep.value = -acc;
    if (converged) {
        rep.verdict = TotalCurvatureReport::Verdict::Finite;
        rep.inferred_l = -rep.value / kTwoPi;
        double snapped = std::round(rep.inferred_l);
        if (std::abs(rep.inferred_l - snapped) < 1e-3) {
            rep.inferred_l = snapped;
            rep.l_near_integer = true;
        }
    }
    return rep;
}

BoundReport bound_evaluator(int N, int k, int d, int M, int q) {
    if (!(N >= k && k >= 1 && d >= 1 && M >= k && q >= 1))
        throw std::invalid_argument("bound_evaluator: need N >= k >= 1, d >= 1, M >= k, q >= 1");
    BoundReport rep;
    rep.N = N;
    rep.k = k;
    rep.d = d;
    rep.M = M;
    rep.q = q;
    Rat a(2 * N - k + 1);
    Rat first = a * Rat(M + 1) / Rat(k + 1);
    rep.B1 = first + a * Rat(M) * Rat(M + 1) / (Rat(2 * d) * Rat(k + 1));
    rep.B2 = first + a * Rat(M) * Rat(M + 1) / (Rat(d) * Rat(k + 1));
    rep.B1_product = a * Rat(M + 1) * Rat(M + 2 * d) / (Rat(2 * d) * Rat(k + 1));
    rep.forms_agree = rep.B1 == rep.B1_product;
    return rep;
}

RamificationWitness ramification_defect_witness(const CurveRep& F,
                                                const HomogeneousPolynomial& Q, int M, int m_j,
                                                double inner, double outer) {
    if (m_j < 1) throw std::invalid_argument("ramification_defect_witness: m_j >= 1");
    RamificationWitness out;
    ExpPoly qf = compose_with_polynomial(Q, F);
    if (qf.is_zero()) {
        out.note = "Q(F) identically zero";
        return out;
    }
    bool poly = qf.is_polynomial();
    out.exact = poly;
    int min_ord = 0;
    CDouble bad{0, 0};
    if (poly) {
        for (const auto& r : isolate_polynomial_roots(qf.polynomial())) {
            double a = std::abs(r.z);
            if (a < inner || a > outer) continue;
            if (min_ord == 0 || r.multiplicity < min_ord) {
                min_ord = r.multiplicity;
                bad = r.z;
            }
        }
    } else {
        auto zr = zeros_on_annulus(qf, inner, outer);
        for (const auto& p : zr.divisor.support)
            if (min_ord == 0 || p.multiplicity < min_ord) {
                min_ord = p.multiplicity;
                bad = p.z;
            }
        out.note = "numeric order estimation (downgraded certificate)";
    }
    out.min_order = min_ord;
    if (min_ord == 0) {
        out.verified = true;
        out.lower_bound = 1.0; // m_j = infinity
        return out;
    }
    if (min_ord >= m_j) {
        out.verified = true;
        out.lower_bound = std::max(0.0, 1.0 - static_cast<double>(M) / m_j);
    } else {
        out.verified = false;
        out.offending_zero = bad;
        out.note = "zero of order " + std::to_string(min_ord) + " < m_j";
    }
    return out;
}

FtcCriterionReport finite_total_curvature_criterion(const MinimalSurface& s,
                                                    const PositionConfig& cfg,
                                                    const QuotientBasis& B,
                                                    const std::vector<double>& sweep_radii) {
    FtcCriterionReport rep;
    CurveRep g = gauss_map(s);
    DerivedCurveSet D(g, B);
    if (!D.nondegenerate()) {
        rep.applicable = false;
        rep.note = "Gauss map degenerate over I_d(V); criterion excluded";
        return rep;
    }
    rep.applicable = true;
    rep.sweep_radii = sweep_radii;
    double inner = 1e-3;
    for (const auto& Q : cfg.originals) {
        ExpPoly qf = compose_with_polynomial(Q, g);
        std::vector<int> row;
        for (double R : sweep_radii) {
            if (qf.is_zero() || (qf.is_polynomial() && qf.polynomial().degree() == 0)) {
                row.push_back(0);
                continue;
            }
            // include a possible zero at the origin exactly
            int at_zero = 0;
            if (qf.is_polynomial()) {
                GPoly p = qf.polynomial();
                while (p.degree() > 0 && p.coeffs()[0].is_zero()) {
                    ++at_zero;
                    std::vector<GaussRat> c(p.coeffs().begin() + 1, p.coeffs().end());
                    p = GPoly(c);
                }
            }
            row.push_back(at_zero + zeros_on_annulus(qf, inner, R).divisor.total());
        }
        rep.counts.push_back(std::move(row));
    }
    rep.counts_stabilized = true;
    for (const auto& row : rep.counts) {
        std::size_t n = row.size();
        if (n >= 2 && row[n - 1] != row[n - 2]) rep.counts_stabilized = false;
    }
    auto bd = bound_evaluator(cfg.N, cfg.k, cfg.d, B.M(), cfg.q);
    rep.bound = bd.B1;
    rep.q_exceeds_bound = Rat(cfg.q) > bd.B1;
    auto tc = total_curvature(s);
    rep.curvature_verdict = tc.verdict;
    rep.consistent = !(rep.counts_stabilized && rep.q_exceeds_bound &&
                       tc.verdict == TotalCurvatureReport::Verdict::InfiniteOrUnknown);
    return rep;
}

} // namespace vdt
