#pragma once

#include "vdt/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace vdt {

/// Univariate polynomial over the Gaussian rationals, coefficients ascending.
/// The zero polynomial has an empty coefficient vector.
class GPoly {
public:
    GPoly() = default;
    explicit GPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    GPoly(std::initializer_list<GaussRat> coeffs) : c_(coeffs) { trim(); }

    static GPoly constant(GaussRat a) {
        GPoly p;
        if (!a.is_zero()) p.c_ = {std::move(a)};
        return p;
    }
    // c * z^k
    static GPoly monomial(GaussRat c, std::size_t k) {
        GPoly p;
        if (c.is_zero()) return p;
        p.c_.assign(k + 1, GaussRat(0));
        p.c_[k] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussRat>& coeffs() const { return c_; }
    const GaussRat& operator[](std::size_t k) const { return c_[k]; }
    GaussRat leading() const { return c_.empty() ? GaussRat(0) : c_.back(); }

    GPoly operator-() const {
        GPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend GPoly operator+(const GPoly& a, const GPoly& b) {
        std::vector<GaussRat> r(std::max(a.c_.size(), b.c_.size()), GaussRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return GPoly(std::move(r));
    }
    friend GPoly operator-(const GPoly& a, const GPoly& b) { return a + (-b); }
    friend GPoly operator*(const GPoly& a, const GPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<GaussRat> r(a.c_.size() + b.c_.size() - 1, GaussRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return GPoly(std::move(r));
    }
    friend GPoly operator*(const GaussRat& s, const GPoly& p) {
        GPoly r = p;
        for (auto& a : r.c_) a *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const GPoly& a, const GPoly& b) { return a.c_ == b.c_; }

    GPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<GaussRat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = GaussRat(long(i)) * c_[i];
        return GPoly(std::move(r));
    }

    // p(c*z), exact
    GPoly rescale(const GaussRat& scale) const {
        std::vector<GaussRat> r = c_;
        GaussRat acc(1);
        for (std::size_t i = 1; i < r.size(); ++i) {
            acc *= scale;
            r[i] *= acc;
        }
        return GPoly(std::move(r));
    }

    GaussRat eval_exact(const GaussRat& z) const {
        GaussRat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    CDouble eval(const CDouble& z) const {
        CDouble acc{0.0, 0.0};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].to_complex();
        return acc;
    }

    /// Quotient and remainder; the divisor must be nonzero.
    std::pair<GPoly, GPoly> divrem(const GPoly& d) const {
        if (d.is_zero()) throw std::domain_error("GPoly: division by zero polynomial");
        GPoly rem = *this;
        if (rem.degree() < d.degree()) return {GPoly{}, rem};
        std::vector<GaussRat> q(rem.c_.size() - d.c_.size() + 1, GaussRat(0));
        GaussRat lead = d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            std::size_t shift = rem.c_.size() - d.c_.size();
            GaussRat f = rem.leading() / lead;
            q[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + shift] -= f * d.c_[i];
            rem.trim();
        }
        return {GPoly(std::move(q)), rem};
    }

    /// Exact quotient; returns nullopt when the division leaves a remainder.
    std::optional<GPoly> divide_exact(const GPoly& d) const {
        auto [q, r] = divrem(d);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    GPoly monic() const {
        if (is_zero()) return {};
        GaussRat inv = GaussRat(1) / leading();
        return inv * *this;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussRat> c_;
};

inline GPoly gcd(GPoly a, GPoly b) {
    while (!b.is_zero()) {
        GPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline GPoly pow(const GPoly& p, unsigned e) {
    GPoly acc = GPoly::constant(GaussRat(1));
    GPoly base = p;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

/// Yun square-free decomposition: returns (factor, multiplicity) pairs with
/// pairwise-coprime square-free factors whose weighted product is p up to a
/// constant. Characteristic zero, so no wild cases.
inline std::vector<std::pair<GPoly, int>> squarefree_decomposition(const GPoly& p) {
    std::vector<std::pair<GPoly, int>> out;
    if (p.degree() <= 0) return out;
    GPoly a = p.monic();
    GPoly g = gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    GPoly w = *a.divide_exact(g);
    GPoly y = *a.derivative().divide_exact(g);
    int mult = 1;
    while (w.degree() > 0) {
        GPoly z = y - w.derivative();
        GPoly f = gcd(w, z);
        if (f.degree() > 0) out.push_back({f.monic(), mult});
        w = *w.divide_exact(f);
        y = *z.divide_exact(f);
        ++mult;
    }
    return out;
}

/// Highest e with d^e dividing p exactly (d nonconstant, p nonzero).
inline int multiplicity_of_factor(GPoly p, const GPoly& d) {
    int e = 0;
    for (;;) {
        auto q = p.divide_exact(d);
        if (!q) return e;
        p = std::move(*q);
        ++e;
    }
}

/// Refine a set of polynomials into a pairwise-coprime (gcd-free) basis of
/// nonconstant square-free factors spanning the same zero sets.
inline std::vector<GPoly> coprime_basis(std::vector<GPoly> polys) {
    std::vector<GPoly> basis;
    for (auto& p : polys) {
        if (p.degree() <= 0) continue;
        GPoly cur = p.monic();
        // strip square parts; zero sets are all we need
        GPoly g = gcd(cur, cur.derivative());
        if (g.degree() > 0) cur = *cur.divide_exact(g);
        std::vector<GPoly> pending{cur};
        while (!pending.empty()) {
            GPoly f = pending.back();
            pending.pop_back();
            if (f.degree() <= 0) continue;
            bool split = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                GPoly g2 = gcd(f, basis[i]);
                if (g2.degree() > 0 && g2.degree() < basis[i].degree()) {
                    GPoly rest = *basis[i].divide_exact(g2);
                    basis[i] = g2;
                    basis.push_back(rest.monic());
                }
                if (g2.degree() > 0) {
                    auto fq = f.divide_exact(g2);
                    if (fq && fq->degree() >= 0) {
                        f = fq->monic();
                        if (f.degree() > 0) pending.push_back(f);
                        split = true;
                        break;
                    }
                }
            }
            if (!split && f.degree() > 0) basis.push_back(f.monic());
        }
    }
    return basis;
}

} // namespace vdt
