#include "vdt/zeros.hpp"

#include "vdt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <stdexcept>

namespace vdt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWindingTol = 1e-6;

std::vector<CDouble> aberth_roots(const std::vector<CDouble>& monic) {
    const int n = static_cast<int>(monic.size()) - 1; // degree
    if (n <= 0) return {};
    auto eval = [&](const CDouble& z, CDouble& p, CDouble& dp) {
        p = monic[n];
        dp = 0.0;
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + monic[i];
        }
    };
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(monic[i]));
    radius = 1.0 + radius;
    std::vector<CDouble> w(n);
    for (int i = 0; i < n; ++i) {
        double ang = 2.399963229728653 * (i + 1); // golden angle spread
        w[i] = radius * 0.5 * CDouble(std::cos(ang), std::sin(ang)) + CDouble(0.1, 0.3);
    }
    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            CDouble p, dp;
            eval(w[i], p, dp);
            if (std::abs(p) == 0.0) continue;
            if (std::abs(dp) == 0.0) {
                w[i] += CDouble(1e-8, 1e-8);
                continue;
            }
            CDouble ratio = p / dp;
            CDouble sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (w[i] - w[j]);
            CDouble corr = ratio / (1.0 - ratio * sum);
            w[i] -= corr;
            moved = std::max(moved, std::abs(corr));
        }
        if (moved < 1e-14 * (1.0 + radius)) break;
    }
    return w;
}

} // namespace

std::vector<IsolatedRoot> isolate_polynomial_roots(const GPoly& p) {
    std::vector<IsolatedRoot> out;
    if (p.degree() <= 0) return out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::vector<CDouble> monic;
        for (const auto& c : factor.coeffs()) monic.push_back(c.to_complex());
        CDouble lead = monic.back();
        for (auto& c : monic) c /= lead;
        auto roots = aberth_roots(monic);
        const int n = factor.degree();
        for (const auto& r : roots) {
            CDouble val = factor.eval(r);
            CDouble dval = factor.derivative().eval(r);
            double incl = dval == CDouble(0.0) ? 1e-6
                                               : static_cast<double>(n) * std::abs(val / dval);
            out.push_back({r, mult, incl});
        }
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        double aa = std::arg(a.z), ab = std::arg(b.z);
        if (aa != ab) return aa < ab;
        return std::abs(a.z) < std::abs(b.z);
    });
    return out;
}

namespace {

// f'/f along contour pieces, scaled against the shared exponential factor
struct LogDeriv {
    const CompiledExpPoly& f;
    const CompiledExpPoly& fp;
    double rate = 0.0; // max |lambda|: reciprocal feature width of exp terms

    LogDeriv(const CompiledExpPoly& f_, const CompiledExpPoly& fp_) : f(f_), fp(fp_) {
        for (const auto& t : f.terms) rate = std::max(rate, std::abs(t.lambda));
    }

    CDouble at(const CDouble& z) const {
        double m = f.scale_at(z);
        CDouble den = f.eval_scaled(z, m);
        CDouble num = fp.eval_scaled(z, m);
        return num / den;
    }

    // initial panels so that node spacing resolves the exp transition width
    int splits_for(double len) const {
        double s = 1.0 + len * rate / 2.0;
        return static_cast<int>(std::min(8192.0, s));
    }
};

struct ContourResult {
    double winding = 0.0; // value/(2 pi i) real part
    double residual = 0.0;
    bool converged = true;
};

// (1/2pi i) of the integral of g(z) f'/f dz over the sector boundary
// [r1,r2] x [t1,t2]; weight==true integrates z f'/f instead.
CDouble sector_contour(const LogDeriv& ld, double r1, double r2, double t1, double t2,
                       bool weight, double& err, bool& ok) {
    CDouble total{0.0, 0.0};
    err = 0.0;
    ok = true;
    auto arc = [&](double r, double a, double b) {
        auto f = [&](double th) {
            CDouble z = std::polar(r, th);
            CDouble v = ld.at(z) * z; // dz = i z dtheta; divide by i later
            if (weight) v *= z;
            return v;
        };
        int splits = ld.splits_for(r * std::abs(b - a));
        auto res = integrate_adaptive_complex(f, a, b, 1e-9, 26, 250000 + 64u * splits, splits);
        err += res.error_estimate;
        ok = ok && res.converged;
        return res.value / kTwoPi; // (1/2pi i) * i * integral
    };
    auto radial = [&](double th, double ra, double rb) {
        CDouble dir = std::polar(1.0, th);
        auto f = [&](double rho) {
            CDouble z = rho * dir;
            CDouble v = ld.at(z) * dir;
            if (weight) v *= z;
            return v;
        };
        int splits = ld.splits_for(std::abs(rb - ra));
        auto res = integrate_adaptive_complex(f, ra, rb, 1e-9, 26, 250000 + 64u * splits, splits);
        err += res.error_estimate;
        ok = ok && res.converged;
        return res.value / CDouble(0.0, kTwoPi); // (1/2pi i)
    };
    // radial pieces of a full turn coincide and cancel exactly
    bool full_turn = (t2 - t1) >= kTwoPi - 1e-14;
    total += arc(r2, t1, t2);
    if (!full_turn) total += radial(t2, r2, r1);
    total += arc(r1, t2, t1);
    if (!full_turn) total += radial(t1, r1, r2);
    return total;
}

ContourResult circle_winding(const LogDeriv& ld, double r) {
    auto f = [&](double th) {
        CDouble z = std::polar(r, th);
        return ld.at(z) * z;
    };
    int splits = ld.splits_for(r * kTwoPi);
    auto res = integrate_adaptive_complex(f, 0.0, kTwoPi, 1e-9, 24, 400000 + 32u * splits,
                                          splits);
    double w = res.value.real() / kTwoPi; // real part of (1/2pi i)*i*integral
    ContourResult out;
    out.winding = w;
    out.residual = std::abs(w - std::round(w)) + std::abs(res.value.imag() / kTwoPi);
    out.converged = res.converged;
    return out;
}

struct Cell {
    double r1, r2, t1, t2;
    int count;
};

int integer_or_fail(const CDouble& v, double& residual) {
    double w = v.real();
    double rd = std::abs(w - std::round(w)) + std::abs(v.imag());
    residual = std::max(residual, rd);
    if (rd > 1e-4) return -1;
    return static_cast<int>(std::llround(w));
}

} // namespace

int count_zeros_annulus(const CompiledExpPoly& f, const CompiledExpPoly& fp, double s, double t) {
    LogDeriv ld{f, fp};
    auto wo = circle_winding(ld, t);
    auto wi = circle_winding(ld, s);
    if (wo.residual > kWindingTol || wi.residual > kWindingTol || !wo.converged || !wi.converged)
        throw std::runtime_error(
            "count_zeros_annulus: boundary-zero or precision failure (non-integer winding)");
    return static_cast<int>(std::llround(wo.winding - wi.winding));
}

ZeroSearchReport zeros_on_annulus(const ExpPoly& f, double s, double t) {
    if (f.is_zero()) throw std::invalid_argument("zeros_on_annulus: f identically zero");
    if (!(s > 0.0) || !(t > s)) throw std::invalid_argument("zeros_on_annulus: need 0 < s < t");

    ZeroSearchReport rep;
    rep.divisor.region = Region::annulus(s, t);
    rep.s_used = s;
    rep.t_used = t;

    if (f.is_polynomial()) {
        rep.polynomial_mode = true;
        GPoly p = f.polynomial();
        if (p.degree() == 0) return rep; // nonzero constant: no zeros
        auto roots = isolate_polynomial_roots(p);
        // boundary proximity triggers the documented radius perturbation
        for (const auto& r : roots) {
            double a = std::abs(r.z);
            if (std::abs(a - rep.s_used) <= 2.0 * r.inclusion_radius + 1e-12 * s) {
                rep.s_used = s * (1.0 - 1e-9);
                rep.radii_perturbed = true;
            }
            if (std::abs(a - rep.t_used) <= 2.0 * r.inclusion_radius + 1e-12 * t) {
                rep.t_used = t * (1.0 + 1e-9);
                rep.radii_perturbed = true;
            }
        }
        for (const auto& r : roots) {
            double a = std::abs(r.z);
            if (a >= rep.s_used && a <= rep.t_used)
                rep.divisor.support.push_back({r.z, r.multiplicity});
        }
        rep.divisor.sort_canonical();
        // cross-check the count against the argument principle
        CompiledExpPoly cf = compile(f);
        CompiledExpPoly cfp = compile(f.derivative());
        int contour = count_zeros_annulus(cf, cfp, rep.s_used, rep.t_used);
        rep.cross_checked = true;
        if (contour != rep.divisor.total())
            throw std::runtime_error("zeros_on_annulus: isolation vs argument principle mismatch");
        return rep;
    }

    CompiledExpPoly cf = compile(f);
    CompiledExpPoly cfp = compile(f.derivative());
    LogDeriv ld{cf, cfp};

    // outer/inner windings, perturbing radii off boundary zeros if needed
    auto verified_circle = [&](double r, bool outer) {
        for (int attempt = 0; attempt < 6; ++attempt) {
            auto w = circle_winding(ld, r);
            rep.max_winding_residual = std::max(rep.max_winding_residual, w.residual);
            if (w.residual <= kWindingTol && w.converged)
                return std::pair<double, int>{r, static_cast<int>(std::llround(w.winding))};
            rep.radii_perturbed = true;
            r *= outer ? (1.0 + 1e-9 * (1 << attempt)) : (1.0 - 1e-9 * (1 << attempt));
        }
        throw std::runtime_error(
            "zeros_on_annulus: boundary-zero or precision failure on circle contour");
    };
    auto [s_ok, wind_s] = verified_circle(s, false);
    auto [t_ok, wind_t] = verified_circle(t, true);
    rep.s_used = s_ok;
    rep.t_used = t_ok;
    int total = wind_t - wind_s;
    if (total < 0)
        throw std::runtime_error("zeros_on_annulus: negative count (f has poles?)");
    if (total == 0) return rep;

    // recursive sector subdivision in (log r, theta); the whole annulus is
    // rotated so that no catalogue zero sits on the initial seam, with a few
    // fallback rotations if one does
    auto cell_count = [&](double r1, double r2, double t1, double t2, bool& good) {
        double err = 0.0;
        bool ok = true;
        CDouble v = sector_contour(ld, r1, r2, t1, t2, false, err, ok);
        double resid = 0.0;
        int c = integer_or_fail(v, resid);
        good = ok && c >= 0;
        // only accepted contours feed the reported residual; rejected jitter
        // attempts are retried and would otherwise pollute the diagnostics
        if (good) rep.max_winding_residual = std::max(rep.max_winding_residual, resid);
        return c;
    };

    auto subdivide = [&](double alpha) {
        std::vector<Cell> stack{{rep.s_used, rep.t_used, alpha, alpha + kTwoPi, total}};
        while (!stack.empty()) {
            Cell cell = stack.back();
            stack.pop_back();
            if (cell.count == 0) continue;
            double dr = cell.r2 - cell.r1;
            double ds = 0.5 * (cell.r1 + cell.r2) * (cell.t2 - cell.t1);
            double sz = std::max(dr, ds);
            if (cell.count == 1 || sz < 3e-3 * cell.r2) {
                // localize: first moment of the zero set inside the cell,
                // polished by multiplicity-aware Newton; the result must stay
                // inside the cell or the cell is split further
                double err = 0.0;
                bool ok = true;
                CDouble zs =
                    sector_contour(ld, cell.r1, cell.r2, cell.t1, cell.t2, true, err, ok);
                CDouble z0 = zs / static_cast<double>(cell.count);
                for (int it = 0; it < 60; ++it) {
                    double m = cf.scale_at(z0);
                    CDouble fv = cf.eval_scaled(z0, m);
                    CDouble dv = cfp.eval_scaled(z0, m);
                    if (std::abs(dv) == 0.0) break;
                    CDouble step = static_cast<double>(cell.count) * fv / dv;
                    z0 -= step;
                    if (std::abs(step) < 1e-15 * (1.0 + std::abs(z0))) break;
                }
                double rad = std::abs(z0);
                double rpad = 1e-9 * (1.0 + cell.r2);
                bool inside = rad >= cell.r1 - rpad && rad <= cell.r2 + rpad;
                if (inside) {
                    double span = cell.t2 - cell.t1;
                    double rel = std::fmod(std::arg(z0) - cell.t1 + 4.0 * kTwoPi, kTwoPi);
                    inside = rel <= span + 1e-9 || span >= kTwoPi - 1e-12;
                }
                if (ok && inside) {
                    rep.divisor.support.push_back({z0, cell.count});
                    continue;
                }
                if (sz < 1e-8 * cell.r2)
                    throw std::runtime_error(
                        "zeros_on_annulus: localization failed to pin a zero inside its cell");
                // fall through to a further split
            }
            bool split_radial = dr > ds;
            bool placed = false;
            // deterministic per-cell jitter stream: fixed lists are always
            // unlucky against some zero ladder
            std::uint64_t h = 0xcbf29ce484222325ull;
            auto mix = [&h](double x) {
                std::uint64_t b;
                std::memcpy(&b, &x, 8);
                h = (h ^ b) * 0x100000001b3ull;
            };
            mix(cell.r1), mix(cell.r2), mix(cell.t1), mix(cell.t2);
            std::mt19937_64 jrng(h);
            std::uniform_real_distribution<double> jd(-0.35, 0.35);
            for (int attempt = 0; attempt < 14 && !placed; ++attempt) {
                double jitter = attempt == 0 ? 0.0 : jd(jrng);
                if (attempt > 0 && std::abs(jitter) < 0.02) jitter = 0.12;
                double frac = 0.5 + jitter;
                Cell a = cell, b = cell;
                if (split_radial) {
                    double rm = cell.r1 + frac * dr;
                    a.r2 = rm;
                    b.r1 = rm;
                } else {
                    double tm = cell.t1 + frac * (cell.t2 - cell.t1);
                    a.t2 = tm;
                    b.t1 = tm;
                }
                bool ga = false, gb = false;
                a.count = cell_count(a.r1, a.r2, a.t1, a.t2, ga);
                if (!ga) continue;
                b.count = cell.count - a.count;
                if (b.count < 0) continue;
                // verify the sibling too; a zero can sit on the new edge
                int bc = cell_count(b.r1, b.r2, b.t1, b.t2, gb);
                if (!gb || bc != b.count) continue;
                stack.push_back(a);
                stack.push_back(b);
                placed = true;
            }
            if (!placed)
                throw std::runtime_error(
                    "zeros_on_annulus: subdivision failed to separate zeros");
        }
    };

    std::string last_error;
    for (double alpha : {0.234567, 1.112131, 2.345678, 3.789123}) {
        rep.divisor.support.clear();
        last_error.clear();
        try {
            subdivide(alpha);
            break;
        } catch (const std::runtime_error& e) {
            last_error = e.what();
        }
    }
    if (!last_error.empty()) throw std::runtime_error(last_error);

    // merge duplicate localizations (zero on a seam found from both sides)
    rep.divisor.sort_canonical();
    std::vector<DivisorPoint> merged;
    for (const auto& pt : rep.divisor.support) {
        if (!merged.empty() && std::abs(merged.back().z - pt.z) <
                                   1e-7 * (1.0 + std::abs(pt.z))) {
            merged.back().multiplicity += pt.multiplicity;
        } else {
            merged.push_back(pt);
        }
    }
    rep.divisor.support = std::move(merged);
    int found = rep.divisor.total();
    if (found != total)
        throw std::runtime_error("zeros_on_annulus: localized multiplicity " +
                                 std::to_string(found) + " != contour total " +
                                 std::to_string(total));
    return rep;
}

ReducedCertificate certify_reduced(const CurveRep& F, double probe_inner, double probe_outer) {
    ReducedCertificate cert;
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
        cert.exact = true;
        if (first) {
            cert.reduced = false;
            cert.note = "all components identically zero";
            return cert;
        }
        if (g.degree() == 0) {
            cert.note = "polynomial gcd is constant";
            return cert;
        }
        // common polynomial factor: any root inside the region is a witness
        for (const auto& r : isolate_polynomial_roots(g)) {
            if (F.region.contains(r.z)) {
                cert.reduced = false;
                cert.common_zero = r.z;
                cert.note = "common polynomial factor with root in region";
                return cert;
            }
        }
        cert.note = "common factor exists but has no root in the region";
        return cert;
    }
    // probe: zeros of the first not-identically-zero component, checked
    // against the others
    double inner = probe_inner, outer = probe_outer;
    if (!(outer > inner) || !(inner > 0.0)) {
        inner = (F.region.kind == Region::Kind::Disk) ? 0.05 * F.region.b
                                                      : std::max(F.region.a, 1e-3);
        outer = (F.region.kind == Region::Kind::Disk) ? 0.95 * F.region.b
                                                      : std::max(8.0, 4.0 * inner);
    }
    std::size_t lead = 0;
    while (lead < F.components.size() && F.components[lead].is_zero()) ++lead;
    if (lead == F.components.size()) {
        cert.reduced = false;
        cert.note = "all components identically zero";
        return cert;
    }
    auto zr = zeros_on_annulus(F.components[lead], inner, outer);
    for (const auto& pt : zr.divisor.support) {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& c : F.components)
            if (!c.is_zero()) worst = std::max(worst, c.log_abs(pt.z));
        if (worst < std::log(1e-8)) {
            cert.reduced = false;
            cert.common_zero = pt.z;
            cert.note = "sampled common zero";
            return cert;
        }
    }
    cert.note = "no common zero among sampled zeros of component " + std::to_string(lead);
    return cert;
}

} // namespace vdt
