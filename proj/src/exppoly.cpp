#include "vdt/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vdt {

void ExpPoly::insert(const GaussRat& lambda, GPoly p) {
    if (p.is_zero()) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_[lambda] = std::move(p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r;
    for (const auto& [l, p] : terms_) r.terms_[l] = -p;
    return r;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r = a;
    for (const auto& [l, p] : b.terms_) r.insert(l, p);
    return r;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    for (const auto& [la, pa] : a.terms_)
        for (const auto& [lb, pb] : b.terms_) r.insert(la + lb, pa * pb);
    return r;
}

ExpPoly operator*(const GaussRat& s, const ExpPoly& f) {
    ExpPoly r;
    if (s.is_zero()) return r;
    for (const auto& [l, p] : f.terms_) r.terms_[l] = s * p;
    return r;
}

ExpPoly ExpPoly::derivative() const {
    ExpPoly r;
    // (p e^{lz})' = (p' + l p) e^{lz}
    for (const auto& [l, p] : terms_) r.insert(l, p.derivative() + l * p);
    return r;
}

ExpPoly ExpPoly::rescale(const GaussRat& c) const {
    ExpPoly r;
    for (const auto& [l, p] : terms_) r.insert(l * c, p.rescale(c));
    return r;
}

CDouble ExpPoly::eval(const CDouble& z) const {
    CDouble acc{0.0, 0.0};
    for (const auto& [l, p] : terms_) {
        double ex = (l.to_complex() * z).real();
        if (ex > 700.0)
            throw EvalOverflow("ExpPoly::eval: exp overflow at |z|=" + std::to_string(std::abs(z)));
        acc += p.eval(z) * std::exp(l.to_complex() * z);
    }
    return acc;
}

double ExpPoly::scale_at(const CDouble& z) const {
    double m = 0.0;
    bool first = true;
    for (const auto& [l, p] : terms_) {
        double s = (l.to_complex() * z).real();
        if (first || s > m) m = s, first = false;
    }
    return first ? 0.0 : m;
}

CDouble ExpPoly::eval_scaled(const CDouble& z, double m) const {
    CDouble acc{0.0, 0.0};
    for (const auto& [l, p] : terms_) acc += p.eval(z) * std::exp(l.to_complex() * z - m);
    return acc;
}

double ExpPoly::log_abs(const CDouble& z) const {
    double m = scale_at(z);
    double a = std::abs(eval_scaled(z, m));
    return a == 0.0 ? -std::numeric_limits<double>::infinity() : m + std::log(a);
}

ExpPoly pow(const ExpPoly& f, unsigned e) {
    ExpPoly acc = ExpPoly::constant(GaussRat(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

ExpPoly differentiate(const ExpPoly& f, int order) {
    if (order < 0) throw std::invalid_argument("differentiate: negative order");
    ExpPoly r = f;
    for (int i = 0; i < order; ++i) r = r.derivative();
    return r;
}

CompiledExpPoly compile(const ExpPoly& f) {
    CompiledExpPoly c;
    for (const auto& [l, p] : f.terms()) {
        CompiledExpPoly::Term t;
        t.lambda = l.to_complex();
        for (const auto& a : p.coeffs()) t.coeffs.push_back(a.to_complex());
        c.terms.push_back(std::move(t));
    }
    return c;
}

void Divisor::sort_canonical() {
    std::sort(support.begin(), support.end(), [](const DivisorPoint& a, const DivisorPoint& b) {
        double aa = std::arg(a.z), ab = std::arg(b.z);
        if (aa != ab) return aa < ab;
        return std::abs(a.z) < std::abs(b.z);
    });
}

std::vector<CDouble> CurveRep::eval(const CDouble& z) const {
    std::vector<CDouble> v;
    v.reserve(components.size());
    for (const auto& f : components) v.push_back(f.eval(z));
    return v;
}

double CurveRep::log_norm(const CDouble& z) const {
    double m = -std::numeric_limits<double>::infinity();
    std::vector<double> las;
    las.reserve(components.size());
    for (const auto& f : components) {
        double la = f.log_abs(z);
        las.push_back(la);
        m = std::max(m, la);
    }
    if (!std::isfinite(m)) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (double la : las) {
        double d = la - m;
        if (d > -745.0) s += std::exp(2.0 * d);
    }
    return m + 0.5 * std::log(s);
}

bool CurveRep::on_target() const {
    if (!target) return true;
    for (const auto& g : target->generators)
        if (!compose_with_polynomial(g, components).is_zero()) return false;
    return true;
}

ExpPoly compose_with_polynomial(const HomogeneousPolynomial& Q,
                                const std::vector<ExpPoly>& components) {
    if (Q.ambient() + 1 != static_cast<int>(components.size()))
        throw std::invalid_argument("compose_with_polynomial: ambient mismatch");
    ExpPoly acc;
    for (const auto& [m, c] : Q.terms()) {
        ExpPoly t = ExpPoly::constant(c);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0) t = t * pow(components[i], m.exponents[i]);
        acc = acc + t;
    }
    return acc;
}

ExpPoly compose_with_polynomial(const HomogeneousPolynomial& Q, const CurveRep& F) {
    return compose_with_polynomial(Q, F.components);
}

double log_norm_compiled(const std::vector<CompiledExpPoly>& comps, const CDouble& z) {
    double m = -std::numeric_limits<double>::infinity();
    std::vector<double> las;
    las.reserve(comps.size());
    for (const auto& f : comps) {
        double la = f.log_abs(z);
        las.push_back(la);
        m = std::max(m, la);
    }
    if (!std::isfinite(m)) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (double la : las) {
        double d = la - m;
        if (d > -745.0) s += std::exp(2.0 * d);
    }
    return m + 0.5 * std::log(s);
}

} // namespace vdt
