#include "vdt/position.hpp"

#include "vdt/linalg.hpp"
#include "vdt/univariate.hpp"
#include "vdt/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace vdt {

namespace {

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

// binary form in (u0, u1) -> univariate in t = u1/u0, plus degree bookkeeping
// for the zero at (0:1)
GPoly dehomogenize_binary(const HomogeneousPolynomial& B) {
    std::vector<GaussRat> c(B.degree() + 1, GaussRat(0));
    for (const auto& [m, a] : B.terms()) c[m.exponents[1]] = a;
    return GPoly(c);
}

// exact nullspace of a small row system over the Gaussian rationals
std::vector<std::vector<GaussRat>> nullspace(std::vector<std::vector<GaussRat>> m,
                                             std::size_t width) {
    // RREF
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < width && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        GaussRat inv = GaussRat(1) / m[rank][c];
        for (auto& v : m[rank]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            GaussRat f = m[r][c];
            for (std::size_t c2 = 0; c2 < width; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<std::vector<GaussRat>> basis;
    for (std::size_t c = 0; c < width; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::vector<GaussRat> v(width, GaussRat(0));
        v[c] = GaussRat(1);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// P == l^e for a linear form l? extraction + exact verification
std::optional<HomogeneousPolynomial> linear_power_root(const HomogeneousPolynomial& P) {
    int n = P.ambient();
    int e = P.degree();
    if (P.is_zero()) return std::nullopt;
    if (e == 1) return P;
    // first variable appearing in P
    int a = -1;
    for (const auto& [m, c] : P.terms())
        for (int i = 0; i <= n && a < 0; ++i)
            if (m.exponents[i] > 0) a = i;
    MultiIndex pure;
    pure.exponents.assign(n + 1, 0);
    pure.exponents[a] = e;
    GaussRat alpha_e = P.coeff(pure);
    if (alpha_e.is_zero()) return std::nullopt; // x_a appears but not to power e
    // candidate l = alpha x_a + m with alpha^e known only up to an e-th root;
    // normalize l so its x_a coefficient is 1, verify P == alpha_e * l^e
    std::vector<GaussRat> lc(n + 1, GaussRat(0));
    lc[a] = GaussRat(1);
    for (int i = 0; i <= n; ++i) {
        if (i == a) continue;
        MultiIndex mi;
        mi.exponents.assign(n + 1, 0);
        mi.exponents[a] = e - 1;
        mi.exponents[i] = 1;
        // coefficient of x_a^{e-1} x_i in (x_a + m)^e is e * m_i
        lc[i] = P.coeff(mi) / (GaussRat(long(e)) * alpha_e);
    }
    HomogeneousPolynomial l = HomogeneousPolynomial::linear(lc);
    if (alpha_e * l.pow(e) == P) return l;
    return std::nullopt;
}

EmptinessResult one_parameter_emptiness(const std::vector<HomogeneousPolynomial>& pulled,
                                        const VarietyPresentation& V) {
    EmptinessResult res;
    // all identically zero: the whole curve is a common zero
    bool all_zero = true;
    GPoly g;
    bool have_g = false;
    bool infinity_common = true; // (0:1) in parameter space
    for (const auto& B : pulled) {
        if (B.is_zero()) continue;
        all_zero = false;
        GPoly b = dehomogenize_binary(B);
        infinity_common = infinity_common && (b.degree() < B.degree());
        g = have_g ? gcd(g, b) : b.monic();
        have_g = true;
    }
    auto param_to_ambient = [&](const std::vector<CDouble>& u) {
        std::vector<CDouble> x;
        for (const auto& comp : *V.parametrization) x.push_back(comp.eval(u));
        return x;
    };
    if (all_zero) {
        res.empty = false;
        res.witness_ambient = param_to_ambient({CDouble{1, 0}, CDouble{0, 0}});
        res.note = "all pullbacks vanish identically";
        return res;
    }
    if (have_g && g.degree() > 0) {
        res.empty = false;
        auto roots = isolate_polynomial_roots(g);
        res.witness_ambient = param_to_ambient({CDouble{1, 0}, roots[0].z});
        res.note = "common root of pulled-back forms";
        return res;
    }
    if (infinity_common) {
        res.empty = false;
        res.witness_ambient = param_to_ambient({CDouble{0, 0}, CDouble{1, 0}});
        res.note = "common zero at the parameter point at infinity";
        return res;
    }
    res.empty = true;
    res.note = "gcd of pullbacks is constant";
    return res;
}

} // namespace

PositionConfig PositionConfig::make(VarietyPresentation V,
                                    std::vector<HomogeneousPolynomial> hypersurfaces, int N) {
    PositionConfig cfg;
    cfg.V = std::move(V);
    cfg.N = N;
    cfg.k = cfg.V.k;
    cfg.q = static_cast<int>(hypersurfaces.size());
    if (cfg.q < cfg.k + 1)
        throw std::invalid_argument("PositionConfig: need q >= k+1 hypersurfaces");
    if (N < cfg.k) throw std::invalid_argument("PositionConfig: need N >= k");
    cfg.d = 1;
    for (const auto& Q : hypersurfaces) {
        if (Q.is_zero()) throw std::invalid_argument("PositionConfig: zero hypersurface");
        cfg.d = lcm_int(cfg.d, Q.degree());
    }
    for (auto& Q : hypersurfaces) {
        cfg.original_degrees.push_back(Q.degree());
        cfg.lifted.push_back(Q.pow(static_cast<unsigned>(cfg.d / Q.degree())));
        cfg.originals.push_back(std::move(Q));
    }
    return cfg;
}

EmptinessResult common_zero_empty(const VarietyPresentation& V,
                                  const std::vector<HomogeneousPolynomial>& forms) {
    if (!V.parametrization)
        throw std::invalid_argument("common_zero_empty: unsupported presentation "
                                    "(no rational parametrization)");
    std::vector<HomogeneousPolynomial> pulled;
    pulled.reserve(forms.size());
    for (const auto& f : forms) pulled.push_back(f.substitute(*V.parametrization));
    const int pv = V.param_vars();

    if (pv == 2) return one_parameter_emptiness(pulled, V);

    if (pv == 3) {
        // a pullback that vanishes identically cuts nothing out of V
        std::vector<HomogeneousPolynomial> linears;
        std::vector<HomogeneousPolynomial> others;
        for (const auto& p : pulled) {
            if (p.is_zero()) continue;
            if (auto l = linear_power_root(p))
                linears.push_back(*l);
            else
                others.push_back(p);
        }
        std::vector<std::vector<GaussRat>> rows;
        for (const auto& l : linears) rows.push_back(l.dense_coeffs());
        auto kernel = nullspace(rows, 3);
        auto param_to_ambient = [&](const std::vector<CDouble>& u) {
            std::vector<CDouble> x;
            for (const auto& comp : *V.parametrization) x.push_back(comp.eval(u));
            return x;
        };
        EmptinessResult res;
        if (kernel.empty()) {
            res.empty = true;
            res.note = "linear subsystem already has no projective solution";
            return res;
        }
        if (kernel.size() == 1) {
            // single projective point: evaluate the remaining forms exactly
            std::vector<HomogeneousPolynomial> pt;
            for (int i = 0; i < 3; ++i) {
                HomogeneousPolynomial c(0, 0);
                MultiIndex m0;
                m0.exponents = {0};
                c.set(m0, kernel[0][i]);
                pt.push_back(c);
            }
            bool all_vanish = true;
            for (const auto& o : others) all_vanish = all_vanish && o.substitute(pt).is_zero();
            res.empty = !all_vanish;
            if (all_vanish) {
                std::vector<CDouble> u;
                for (const auto& c : kernel[0]) u.push_back(c.to_complex());
                res.witness_ambient = param_to_ambient(u);
                res.note = "unique linear solution lies on the residual forms";
            } else {
                res.note = "unique linear solution misses a residual form";
            }
            return res;
        }
        if (kernel.size() == 2) {
            // a projective line: restrict residual forms to it and recurse
            std::vector<HomogeneousPolynomial> line;
            for (int i = 0; i < 3; ++i) {
                HomogeneousPolynomial c(1, 1);
                MultiIndex ms, mt;
                ms.exponents = {1, 0};
                mt.exponents = {0, 1};
                c.set(ms, kernel[0][i]);
                c.set(mt, kernel[1][i]);
                line.push_back(c);
            }
            if (others.empty()) {
                res.empty = false;
                std::vector<CDouble> u;
                for (const auto& c : kernel[0]) u.push_back(c.to_complex());
                res.witness_ambient = param_to_ambient(u);
                res.note = "linear system leaves a positive-dimensional locus";
                return res;
            }
            std::vector<HomogeneousPolynomial> restricted;
            for (const auto& o : others) restricted.push_back(o.substitute(line));
            VarietyPresentation lineV;
            lineV.n = 2;
            lineV.k = 1;
            lineV.parametrization = line; // reuse the 1-parameter machinery
            auto sub = one_parameter_emptiness(restricted, lineV);
            if (!sub.empty) {
                res.empty = false;
                res.witness_ambient = param_to_ambient(sub.witness_ambient);
                res.note = "zero on the restricted line: " + sub.note;
                return res;
            }
            res.empty = true;
            res.note = "restricted line misses the residual forms";
            return res;
        }
        // kernel.size() == 3: no linear constraints at all
        if (others.empty()) {
            res.empty = false;
            res.witness_ambient = param_to_ambient({CDouble{1, 0}, CDouble{0, 0}, CDouble{0, 0}});
            res.note = "no constraints";
            return res;
        }
        if (others.size() == 1) {
            // a single curve in P^2 always has points; find one on a generic line
            std::vector<HomogeneousPolynomial> line;
            HomogeneousPolynomial c0(1, 1), c1(1, 1), c2(1, 1);
            MultiIndex ms, mt;
            ms.exponents = {1, 0};
            mt.exponents = {0, 1};
            c0.set(ms, GaussRat(1));
            c1.set(mt, GaussRat(1));
            c2.set(ms, GaussRat(1, 1));
            c2.set(mt, GaussRat(2, -1));
            line = {c0, c1, c2};
            auto restricted = others[0].substitute(line);
            GPoly b = dehomogenize_binary(restricted);
            res.empty = false;
            if (b.degree() > 0) {
                auto roots = isolate_polynomial_roots(b);
                std::vector<CDouble> u{CDouble{1, 0}, roots[0].z};
                std::vector<CDouble> uu{line[0].eval(u), line[1].eval(u), line[2].eval(u)};
                res.witness_ambient = param_to_ambient(uu);
            }
            res.note = "single residual curve always meets P^2";
            return res;
        }
        throw std::invalid_argument(
            "common_zero_empty: unsupported presentation (two general forms on a "
            "two-parameter locus needs elimination beyond the shipped catalogue)");
    }
    throw std::invalid_argument("common_zero_empty: unsupported presentation "
                                "(parametrization in >2 parameters)");
}

PositionCheckResult check_subgeneral_position(const PositionConfig& cfg) {
    PositionCheckResult out;
    out.in_position = true;
    std::vector<int> sel;
    bool done = false;
    auto rec = [&](auto&& self, int start, int need) -> void {
        if (done) return;
        if (need == 0) {
            std::vector<HomogeneousPolynomial> sub;
            for (int i : sel) sub.push_back(cfg.lifted[i]);
            auto res = common_zero_empty(cfg.V, sub);
            ++out.subsets_checked;
            if (!res.empty) {
                out.in_position = false;
                out.violating_subset = sel;
                out.witness = res.witness_ambient;
                done = true;
            }
            return;
        }
        for (int i = start; i + need <= cfg.q && !done; ++i) {
            sel.push_back(i);
            self(self, i + 1, need - 1);
            sel.pop_back();
        }
    };
    rec(rec, 0, cfg.N + 1);
    return out;
}

namespace {

// LP feasibility for a fixed extreme weight: returns weights when the
// clause-(ii)/(iv) system admits strictly positive omegas with omega_1 at
// the extreme value
std::optional<std::vector<Rat>> weights_for_extreme(const PositionConfig& cfg,
                                                    const Rat& omega_tilde) {
    const int q = cfg.q;
    const Rat S = omega_tilde * (q - 2 * cfg.N + cfg.k - 1) + (cfg.k + 1);
    // vars: omega_1..omega_q, t ; maximize t
    LinearProgram lp;
    auto row = [&](std::vector<Rat> r, Rat rhs) {
        lp.A.push_back(std::move(r));
        lp.b.push_back(std::move(rhs));
    };
    const std::size_t nv = q + 1;
    // omega_i <= omega_tilde
    for (int i = 0; i < q; ++i) {
        std::vector<Rat> r(nv, Rat(0));
        r[i] = 1;
        row(std::move(r), omega_tilde);
    }
    // omega_1 >= omega_tilde (attain the max)
    {
        std::vector<Rat> r(nv, Rat(0));
        r[0] = -1;
        row(std::move(r), -omega_tilde);
    }
    // sum = S
    {
        std::vector<Rat> r(nv, Rat(0));
        for (int i = 0; i < q; ++i) r[i] = 1;
        row(r, S);
        for (auto& v : r) v = -v;
        row(std::move(r), -S);
    }
    // (N+1)-subset sums <= k+1
    {
        std::vector<int> sel;
        auto rec = [&](auto&& self, int start, int need) -> void {
            if (need == 0) {
                std::vector<Rat> r(nv, Rat(0));
                for (int i : sel) r[i] = 1;
                row(std::move(r), Rat(cfg.k + 1));
                return;
            }
            for (int i = start; i + need <= q; ++i) {
                sel.push_back(i);
                self(self, i + 1, need - 1);
                sel.pop_back();
            }
        };
        rec(rec, 0, cfg.N + 1);
    }
    // t <= omega_i
    for (int i = 0; i < q; ++i) {
        std::vector<Rat> r(nv, Rat(0));
        r[q] = 1;
        r[i] = -1;
        row(std::move(r), Rat(0));
    }
    lp.c.assign(nv, Rat(0));
    lp.c[q] = 1;

    auto sol = solve_lp(lp);
    if (!sol.feasible || sol.objective <= 0) return std::nullopt;
    return std::vector<Rat>(sol.x.begin(), sol.x.begin() + q);
}

} // namespace

NochkaWeights nochka_weights(const PositionConfig& cfg) {
    const int q = cfg.q, N = cfg.N, k = cfg.k;
    if (q <= 2 * N - k + 1)
        throw std::invalid_argument("nochka_weights: requires q > 2N-k+1");
    const Rat lo = Rat(k + 1) / Rat(2 * N - k + 1);
    const Rat hi = Rat(k) / Rat(N);

    NochkaWeights out;
    bool found = false;
    for (int level = 0; level <= 8 && !found; ++level) {
        // rational grid refining the bracket; level 0 is the lower endpoint,
        // which Lemma-2.3-style bookkeeping always admits
        long steps = 1L << level;
        for (long j = 0; j <= steps && !found; ++j) {
            Rat cand = lo + (hi - lo) * Rat(j, steps);
            if (level > 0 && j % 2 == 0) continue; // already visited
            if (auto w = weights_for_extreme(cfg, cand)) {
                out.omegas = *w;
                out.omega_tilde = cand;
                out.certificate.refinement_level = level;
                found = true;
            }
        }
    }
    if (!found)
        throw std::runtime_error("nochka_weights: no certified weights found at maximum "
                                 "refinement (solver limitation, not nonexistence)");

    // certify clauses i)-iv) by direct exact arithmetic
    auto& cert = out.certificate;
    cert.clause_i = true;
    Rat sum(0);
    Rat maxw(0);
    for (const auto& w : out.omegas) {
        cert.clause_i = cert.clause_i && w > 0 && w <= 1;
        sum += w;
        maxw = std::max(maxw, w);
    }
    cert.clause_ii =
        (sum == out.omega_tilde * (q - 2 * N + k - 1) + (k + 1)) && (maxw == out.omega_tilde);
    cert.clause_iii = lo <= out.omega_tilde && out.omega_tilde <= hi;
    cert.clause_iv = true;
    std::vector<int> sel;
    auto rec = [&](auto&& self, int start, int need) -> void {
        if (need == 0) {
            Rat s(0);
            for (int i : sel) s += out.omegas[i];
            cert.clause_iv = cert.clause_iv && s <= k + 1;
            ++cert.subsets_checked;
            return;
        }
        for (int i = start; i + need <= q; ++i) {
            sel.push_back(i);
            self(self, i + 1, need - 1);
            sel.pop_back();
        }
    };
    rec(rec, 0, N + 1);
    if (!(cert.clause_i && cert.clause_ii && cert.clause_iii && cert.clause_iv))
        throw std::logic_error("nochka_weights: certification failed on an LP solution");
    return out;
}

std::vector<int> select_subset_R0(const NochkaWeights& w, const PositionConfig& cfg,
                                  const QuotientBasis& B, const std::vector<int>& R,
                                  const std::vector<double>& E) {
    for (double e : E)
        if (!(e >= 1.0)) throw std::invalid_argument("select_subset_R0: all E_i must be >= 1");
    const int k = cfg.k;
    double target = 0.0;
    for (int i : R) target += w.omegas[i].get_d() * std::log(E[i]);

    std::vector<int> best;
    double best_sum = -1.0;
    std::vector<int> sel;
    auto rec = [&](auto&& self, std::size_t start, int need) -> void {
        if (need == 0) {
            std::vector<HomogeneousPolynomial> sub;
            for (int i : sel) sub.push_back(cfg.lifted[i]);
            if (rank_in_quotient(B, sub) != k + 1) return;
            double s = 0.0;
            for (int i : sel) s += std::log(E[i]);
            if (s > best_sum) {
                best_sum = s;
                best = sel;
            }
            return;
        }
        for (std::size_t i = start; i + need <= R.size(); ++i) {
            sel.push_back(R[i]);
            self(self, i + 1, need - 1);
            sel.pop_back();
        }
    };
    rec(rec, 0, k + 1);
    if (best.empty())
        throw std::runtime_error("select_subset_R0: no full-rank (k+1)-subset in R "
                                 "(internal consistency failure)");
    if (best_sum + 1e-9 < target)
        throw std::runtime_error("select_subset_R0: product inequality unsatisfied by every "
                                 "full-rank subset (weights/solver bug)");
    return best;
}

std::vector<std::vector<CDouble>> sample_points_on_variety(const VarietyPresentation& V,
                                                           int count, unsigned long seed) {
    if (!V.parametrization)
        throw std::invalid_argument("sample_points_on_variety: unsupported presentation");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const int pv = V.param_vars();
    std::vector<std::vector<CDouble>> out;
    for (int i = 0; i < count; ++i) {
        std::vector<CDouble> u;
        for (int j = 0; j < pv; ++j) u.push_back({unif(rng), unif(rng)});
        std::vector<CDouble> x;
        double norm2 = 0.0;
        for (const auto& comp : *V.parametrization) {
            x.push_back(comp.eval(u));
            norm2 += std::norm(x.back());
        }
        if (norm2 < 1e-12) {
            --i;
            continue;
        }
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& v : x) v *= inv;
        out.push_back(std::move(x));
    }
    return out;
}

NormComparability norm_comparability(const PositionConfig& cfg, const std::vector<int>& R,
                                     int n_samples, unsigned long seed) {
    auto pts = sample_points_on_variety(cfg.V, n_samples, seed);
    NormComparability out;
    out.samples = static_cast<int>(pts.size());
    out.alpha_hat = std::numeric_limits<double>::infinity();
    out.beta_hat = 0.0;
    for (const auto& x : pts) {
        double norm2 = 0.0;
        for (const auto& v : x) norm2 += std::norm(v);
        double nd = std::pow(std::sqrt(norm2), cfg.d);
        double mx = 0.0;
        for (int i : R) mx = std::max(mx, std::abs(cfg.lifted[i].eval(x)) / nd);
        out.alpha_hat = std::min(out.alpha_hat, mx);
        out.beta_hat = std::max(out.beta_hat, mx);
    }
    if (!(out.alpha_hat > 0.0))
        throw std::runtime_error("norm_comparability: alpha_hat vanished; the subset appears "
                                 "to meet V (position check inconsistency)");
    return out;
}

} // namespace vdt
