#include "vdt/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vdt {

std::vector<MultiIndex> monomial_basis(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("monomial_basis: n, d must be nonnegative");
    std::vector<MultiIndex> out;
    MultiIndex cur;
    cur.exponents.assign(n + 1, 0);
    // enumerate exponent vectors summing to d, lexicographically descending
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n) {
            cur.exponents[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur.exponents[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

void HomogeneousPolynomial::set(const MultiIndex& m, GaussRat c) {
    if (static_cast<int>(m.nvars()) != n_ + 1 || m.degree() != d_)
        throw std::invalid_argument("HomogeneousPolynomial::set: wrong degree or variable count");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = std::move(c);
}

GaussRat HomogeneousPolynomial::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat(0) : it->second;
}

HomogeneousPolynomial HomogeneousPolynomial::operator-() const {
    HomogeneousPolynomial r(n_, d_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

HomogeneousPolynomial operator+(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.n_ != b.n_ || a.d_ != b.d_)
        throw std::invalid_argument("HomogeneousPolynomial: degree/ambient mismatch in +");
    HomogeneousPolynomial r = a;
    for (const auto& [m, c] : b.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

HomogeneousPolynomial operator-(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    return a + (-b);
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("HomogeneousPolynomial: ambient mismatch in *");
    HomogeneousPolynomial r(a.n_, a.d_ + b.d_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            MultiIndex m = ma;
            for (std::size_t i = 0; i < m.exponents.size(); ++i)
                m.exponents[i] += mb.exponents[i];
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                GaussRat v = ca * cb;
                if (!v.is_zero()) r.terms_[m] = std::move(v);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

HomogeneousPolynomial operator*(const GaussRat& s, const HomogeneousPolynomial& p) {
    HomogeneousPolynomial r(p.n_, p.d_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.terms_) r.terms_[m] = s * c;
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::pow(unsigned e) const {
    if (e == 0) {
        HomogeneousPolynomial one(n_, 0);
        MultiIndex m;
        m.exponents.assign(n_ + 1, 0);
        one.terms_[m] = GaussRat(1);
        return one;
    }
    HomogeneousPolynomial acc = *this;
    for (unsigned i = 1; i < e; ++i) acc = acc * *this;
    return acc;
}

std::vector<GaussRat> HomogeneousPolynomial::dense_coeffs() const {
    auto mons = monomial_basis(n_, d_);
    std::vector<GaussRat> v(mons.size(), GaussRat(0));
    for (std::size_t i = 0; i < mons.size(); ++i) v[i] = coeff(mons[i]);
    return v;
}

HomogeneousPolynomial HomogeneousPolynomial::substitute(
    const std::vector<HomogeneousPolynomial>& components) const {
    if (static_cast<int>(components.size()) != n_ + 1)
        throw std::invalid_argument("substitute: need one component per variable");
    int tn = components[0].ambient();
    int td = components[0].degree();
    HomogeneousPolynomial r(tn, d_ * td);
    for (const auto& [m, c] : terms_) {
        HomogeneousPolynomial term(tn, 0);
        MultiIndex unit;
        unit.exponents.assign(tn + 1, 0);
        term.set(unit, c);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0) term = term * components[i].pow(m.exponents[i]);
        r = r + term;
    }
    return r;
}

CDouble HomogeneousPolynomial::eval(const std::vector<CDouble>& x) const {
    CDouble acc{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        CDouble t = c.to_complex();
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            for (int e = 0; e < m.exponents[i]; ++e) t *= x[i];
        acc += t;
    }
    return acc;
}

HomogeneousPolynomial HomogeneousPolynomial::from_dense(int n, int d,
                                                        const std::vector<GaussRat>& coeffs) {
    auto mons = monomial_basis(n, d);
    if (coeffs.size() != mons.size())
        throw std::invalid_argument("from_dense: coefficient count mismatch");
    HomogeneousPolynomial p(n, d);
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (!coeffs[i].is_zero()) p.terms_[mons[i]] = coeffs[i];
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::linear(const std::vector<GaussRat>& c) {
    int n = static_cast<int>(c.size()) - 1;
    HomogeneousPolynomial p(n, 1);
    for (int i = 0; i <= n; ++i) {
        MultiIndex m;
        m.exponents.assign(n + 1, 0);
        m.exponents[i] = 1;
        if (!c[i].is_zero()) p.terms_[m] = c[i];
    }
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::variable(int n, int i, int d) {
    HomogeneousPolynomial p(n, d);
    MultiIndex m;
    m.exponents.assign(n + 1, 0);
    m.exponents[i] = d;
    p.terms_[m] = GaussRat(1);
    return p;
}

std::string HomogeneousPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0) {
                os << "*x" << i;
                if (m.exponents[i] > 1) os << "^" << m.exponents[i];
            }
    }
    return os.str();
}

bool VarietyPresentation::parametrization_consistent() const {
    if (!parametrization) return true;
    for (const auto& g : generators)
        if (!g.substitute(*parametrization).is_zero()) return false;
    return true;
}

VarietyPresentation VarietyPresentation::projective_space(int n) {
    VarietyPresentation V;
    V.n = n;
    V.k = n;
    V.name = "P" + std::to_string(n);
    std::vector<HomogeneousPolynomial> id;
    for (int i = 0; i <= n; ++i) id.push_back(HomogeneousPolynomial::variable(n, i));
    V.parametrization = std::move(id);
    return V;
}

VarietyPresentation VarietyPresentation::conic_p2() {
    VarietyPresentation V;
    V.n = 2;
    V.k = 1;
    V.name = "conic_x1sq_eq_x0x2";
    HomogeneousPolynomial g(2, 2);
    g.set(MultiIndex{{0, 2, 0}}, GaussRat(1));
    g.set(MultiIndex{{1, 0, 1}}, GaussRat(-1));
    V.generators.push_back(g);
    // (u^2 : uv : v^2)
    std::vector<HomogeneousPolynomial> par;
    par.push_back(HomogeneousPolynomial::variable(1, 0, 2));
    {
        HomogeneousPolynomial uv(1, 2);
        uv.set(MultiIndex{{1, 1}}, GaussRat(1));
        par.push_back(uv);
    }
    par.push_back(HomogeneousPolynomial::variable(1, 1, 2));
    V.parametrization = std::move(par);
    return V;
}

VarietyPresentation VarietyPresentation::minimality_conic() {
    VarietyPresentation V;
    V.n = 2;
    V.k = 1;
    V.name = "minimality_conic";
    HomogeneousPolynomial g(2, 2);
    g.set(MultiIndex{{2, 0, 0}}, GaussRat(1));
    g.set(MultiIndex{{0, 2, 0}}, GaussRat(1));
    g.set(MultiIndex{{0, 0, 2}}, GaussRat(1));
    V.generators.push_back(g);
    // ((u^2-v^2)/2 : i(u^2+v^2)/2 : uv), the Weierstrass sphere chart
    std::vector<HomogeneousPolynomial> par(3, HomogeneousPolynomial(1, 2));
    par[0].set(MultiIndex{{2, 0}}, GaussRat(rat(1, 2)));
    par[0].set(MultiIndex{{0, 2}}, GaussRat(rat(-1, 2)));
    par[1].set(MultiIndex{{2, 0}}, GaussRat(rat(0), rat(1, 2)));
    par[1].set(MultiIndex{{0, 2}}, GaussRat(rat(0), rat(1, 2)));
    par[2].set(MultiIndex{{1, 1}}, GaussRat(1));
    V.parametrization = std::move(par);
    return V;
}

int binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long acc = 1;
    r = std::min(r, n - r);
    for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return static_cast<int>(acc);
}

namespace {

// rows spanning the degree-d slice of the generated ideal
std::vector<std::vector<GaussRat>> ideal_slice_rows(const VarietyPresentation& V, int d) {
    std::vector<std::vector<GaussRat>> rows;
    for (const auto& g : V.generators) {
        int e = g.degree();
        if (e > d) continue;
        for (const auto& m : monomial_basis(V.n, d - e)) {
            HomogeneousPolynomial mono(V.n, d - e);
            mono.set(m, GaussRat(1));
            rows.push_back((g * mono).dense_coeffs());
        }
    }
    return rows;
}

} // namespace

int hilbert_function(const VarietyPresentation& V, int d) {
    if (d < 1) throw std::invalid_argument("hilbert_function: d must be >= 1");
    int full = binomial(V.n + d, V.n);
    auto rows = ideal_slice_rows(V, d);
    std::size_t rank = exact_rank(rows, monomial_basis(V.n, d).size());
    return full - static_cast<int>(rank);
}

QuotientBasis::QuotientBasis(const VarietyPresentation& V, int d)
    : n_(V.n), d_(d), M_(0), space_(monomial_basis(V.n, d).size()) {
    all_monomials_ = monomial_basis(V.n, d);
    for (auto& r : ideal_slice_rows(V, d)) {
        space_.add(std::move(r));
        ++n_ideal_rows_; // every added row widens the combination vector
    }
    int H = static_cast<int>(all_monomials_.size() - space_.rank());
    if (H < 1) throw std::invalid_argument("QuotientBasis: zero-dimensional slice");
    M_ = H - 1;
    std::size_t add_index = n_ideal_rows_;
    for (std::size_t i = 0; i < all_monomials_.size(); ++i) {
        std::vector<GaussRat> row(all_monomials_.size(), GaussRat(0));
        row[i] = GaussRat(1);
        bool accepted = space_.add(std::move(row));
        if (accepted) {
            basis_monomials_.push_back(all_monomials_[i]);
            basis_row_index_.push_back(add_index);
        }
        ++add_index;
        if (static_cast<int>(basis_monomials_.size()) == H) break;
    }
}

HomogeneousPolynomial QuotientBasis::representative(int i) const {
    HomogeneousPolynomial p(n_, d_);
    p.set(basis_monomials_[i], GaussRat(1));
    return p;
}

std::vector<GaussRat> QuotientBasis::reduce(const HomogeneousPolynomial& Q) const {
    if (Q.degree() != d_ || Q.ambient() != n_)
        throw std::invalid_argument("QuotientBasis::reduce: degree or ambient mismatch");
    auto red = space_.reduce(Q.dense_coeffs());
    if (!red.in_span)
        throw std::logic_error("QuotientBasis::reduce: vector escaped the full space");
    // pick the combination entries of the accepted basis monomial rows
    std::vector<GaussRat> a(M_ + 1, GaussRat(0));
    for (int i = 0; i <= M_; ++i) a[i] = red.combination[basis_row_index_[i]];
    return a;
}

int rank_in_quotient(const QuotientBasis& B, const std::vector<HomogeneousPolynomial>& polys) {
    ExactRowSpace sp(B.M() + 1);
    for (const auto& p : polys) {
        if (p.degree() != B.d())
            throw std::invalid_argument("rank_in_quotient: degree mismatch");
        sp.add(B.reduce(p));
    }
    return static_cast<int>(sp.rank());
}

CompletionResult completion_hypersurfaces(const QuotientBasis& B,
                                          const std::vector<HomogeneousPolynomial>& Q, int k,
                                          unsigned long seed, int max_attempts) {
    const int M = B.M();
    CompletionResult res;
    if (M == k) return res; // nothing to complete

    // collect all (k+1)-subsets of full rank
    std::vector<std::vector<int>> qualifying;
    std::vector<int> idx(Q.size());
    std::vector<int> sel;
    auto rec = [&](auto&& self, int start, int need) -> void {
        if (need == 0) {
            std::vector<HomogeneousPolynomial> sub;
            for (int i : sel) sub.push_back(Q[i]);
            if (rank_in_quotient(B, sub) == k + 1) qualifying.push_back(sel);
            return;
        }
        for (int i = start; i + need <= static_cast<int>(Q.size()); ++i) {
            sel.push_back(i);
            self(self, i + 1, need - 1);
            sel.pop_back();
        }
    };
    rec(rec, 0, k + 1);
    if (qualifying.empty())
        throw std::invalid_argument("completion_hypersurfaces: no full-rank (k+1)-subset exists");

    std::vector<int> last_failed;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        unsigned long s = seed + static_cast<unsigned long>(attempt);
        std::mt19937_64 rng(s);
        std::uniform_int_distribution<int> box(-3, 3);
        std::vector<HomogeneousPolynomial> T;
        for (int t = 0; t < M - k; ++t) {
            HomogeneousPolynomial cand(B.ambient(), B.d());
            bool nonzero = false;
            for (const auto& m : B.basis_monomials()) {
                int c = box(rng);
                if (c != 0) {
                    cand.set(m, GaussRat(c));
                    nonzero = true;
                }
            }
            if (!nonzero) cand.set(B.basis_monomials()[t % (M + 1)], GaussRat(1));
            T.push_back(cand);
        }
        bool ok = true;
        for (const auto& R : qualifying) {
            std::vector<HomogeneousPolynomial> all = T;
            for (int i : R) all.push_back(Q[i]);
            if (rank_in_quotient(B, all) != M + 1) {
                ok = false;
                last_failed = R;
                break;
            }
        }
        if (ok) {
            res.hypersurfaces = std::move(T);
            res.seed_used = s;
            res.attempts = attempt + 1;
            return res;
        }
    }
    std::string msg = "completion_hypersurfaces: retry cap exhausted; failing subset {";
    for (std::size_t i = 0; i < last_failed.size(); ++i)
        msg += (i ? "," : "") + std::to_string(last_failed[i]);
    msg += "}";
    throw std::runtime_error(msg);
}

} // namespace vdt
