#include "vdt/wronskian.hpp"

#include "vdt/linalg.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vdt {

namespace {

// minors over column subsets by dynamic programming on rows:
// level r holds det of rows 0..r-1 against every r-subset of columns
std::map<std::uint32_t, ExpPoly> all_subset_minors(const std::vector<std::vector<ExpPoly>>& rows,
                                                   int ncols, int max_level) {
    std::map<std::uint32_t, ExpPoly> cur;
    cur[0] = ExpPoly::constant(GaussRat(1));
    std::map<std::uint32_t, ExpPoly> out;
    out[0] = cur[0];
    for (int level = 1; level <= max_level; ++level) {
        std::map<std::uint32_t, ExpPoly> next;
        for (const auto& [mask, minor] : cur) {
            // expand along row `level-1`: add one more column above the mask
            for (int c = 0; c < ncols; ++c) {
                std::uint32_t bit = 1u << c;
                if (mask & bit) continue;
                // Laplace along the last row: sign by position of c in mask|bit
                int pos = std::popcount(mask & (bit - 1));
                int sign = ((level - 1 - pos) % 2 == 0) ? 1 : -1;
                ExpPoly term = rows[level - 1][c] * minor;
                if (sign < 0) term = -term;
                auto it = next.find(mask | bit);
                if (it == next.end())
                    next[mask | bit] = term;
                else
                    it->second = it->second + term;
            }
        }
        cur = std::move(next);
        for (const auto& [mask, minor] : cur) out[mask] = minor;
    }
    return out;
}

} // namespace

ExpPoly wronskian(const std::vector<ExpPoly>& h) {
    if (h.empty()) throw std::invalid_argument("wronskian: empty input");
    const int n = static_cast<int>(h.size());
    std::vector<std::vector<ExpPoly>> rows(n, std::vector<ExpPoly>(n));
    std::vector<ExpPoly> d = h;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = d[j];
        if (i + 1 < n)
            for (auto& f : d) f = f.derivative();
    }
    auto minors = all_subset_minors(rows, n, n);
    return minors[(n == 32) ? ~0u : ((1u << n) - 1)];
}

bool wronskian_scaling_check(const std::vector<ExpPoly>& h, const ExpPoly& g) {
    std::vector<ExpPoly> scaled;
    scaled.reserve(h.size());
    for (const auto& f : h) scaled.push_back(g * f);
    ExpPoly lhs = wronskian(scaled);
    ExpPoly rhs = pow(g, static_cast<unsigned>(h.size())) * wronskian(h);
    return lhs == rhs;
}

std::vector<std::uint32_t> subsets_of_size(int m_plus_1, int size) {
    std::vector<std::uint32_t> out;
    if (size < 0 || size > m_plus_1) return out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= (1u << i);
        out.push_back(mask);
        int i = size - 1;
        while (i >= 0 && idx[i] == m_plus_1 - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (size == 0) out = {0u};
    return out;
}

std::vector<int> subset_indices(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

DerivedCurveSet::DerivedCurveSet(const CurveRep& F, const QuotientBasis& B)
    : F_(F), B_(B), M_(B.M()) {
    if (M_ + 1 > 20)
        throw std::invalid_argument("DerivedCurveSet: quotient dimension too large");
    vF_.reserve(M_ + 1);
    for (int i = 0; i <= M_; ++i)
        vF_.push_back(compose_with_polynomial(B.representative(i), F_));
    std::vector<std::vector<ExpPoly>> rows(M_ + 1, std::vector<ExpPoly>(M_ + 1));
    std::vector<ExpPoly> d = vF_;
    for (int i = 0; i <= M_; ++i) {
        for (int j = 0; j <= M_; ++j) rows[i][j] = d[j];
        if (i < M_)
            for (auto& f : d) f = f.derivative();
    }
    minors_ = all_subset_minors(rows, M_ + 1, M_ + 1);
}

const ExpPoly& DerivedCurveSet::subset_wronskian(std::uint32_t mask) const {
    auto it = minors_.find(mask);
    if (it == minors_.end())
        throw std::invalid_argument("DerivedCurveSet: unknown subset mask");
    return it->second;
}

double DerivedCurveSet::log_norm(int p, const CDouble& z) const {
    if (p < 0 || p > M_) throw std::invalid_argument("DerivedCurveSet: level out of range");
    double m = -std::numeric_limits<double>::infinity();
    std::vector<double> las;
    for (std::uint32_t mask : subsets_of_size(M_ + 1, p + 1)) {
        double la = subset_wronskian(mask).log_abs(z);
        las.push_back(la);
        m = std::max(m, la);
    }
    if (!std::isfinite(m)) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (double la : las) {
        double dd = la - m;
        if (dd > -745.0) s += std::exp(2.0 * dd);
    }
    return m + 0.5 * std::log(s);
}

bool DerivedCurveSet::nondegenerate() const {
    return !subset_wronskian((1u << (M_ + 1)) - 1).is_zero();
}

std::vector<GaussRat> DerivedCurveSet::degeneracy_witness() const {
    // exact kernel of the linear map c -> sum c_i v_i(F) over the
    // (lambda, power) coefficient lattice
    std::map<std::pair<GaussRat, int>, std::size_t> columns;
    for (const auto& f : vF_)
        for (const auto& [l, p] : f.terms())
            for (int k = 0; k <= p.degree(); ++k) {
                auto key = std::make_pair(l, k);
                if (!columns.count(key)) {
                    std::size_t next = columns.size();
                    columns[key] = next;
                }
            }
    std::size_t width = columns.size();
    ExactRowSpace sp(width);
    std::vector<std::vector<GaussRat>> vecs;
    for (const auto& f : vF_) {
        std::vector<GaussRat> row(width, GaussRat(0));
        for (const auto& [l, p] : f.terms())
            for (int k = 0; k <= p.degree(); ++k)
                row[columns[std::make_pair(l, k)]] = p.coeffs()[k];
        vecs.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        auto red = sp.reduce(vecs[i]);
        if (red.in_span) {
            std::vector<GaussRat> c(vF_.size(), GaussRat(0));
            for (std::size_t j = 0; j < i; ++j) c[j] = -red.combination[j];
            c[i] = GaussRat(1);
            return c;
        }
        sp.add(vecs[i]);
    }
    return {};
}

double InteriorProduct::log_norm(const CDouble& z) const {
    double m = -std::numeric_limits<double>::infinity();
    std::vector<double> las;
    for (const auto& c : components) {
        double la = c.is_zero() ? -std::numeric_limits<double>::infinity() : c.log_abs(z);
        las.push_back(la);
        m = std::max(m, la);
    }
    if (!std::isfinite(m)) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (double la : las) {
        double dd = la - m;
        if (dd > -745.0) s += std::exp(2.0 * dd);
    }
    return m + 0.5 * std::log(s) - std::log(norm_factor);
}

InteriorProduct interior_product_against(const DerivedCurveSet& D, int p,
                                         const std::vector<GaussRat>& a) {
    if (static_cast<int>(a.size()) != D.M() + 1)
        throw std::invalid_argument("interior_product_against: coordinate size mismatch");
    InteriorProduct out;
    out.p = p;
    Rat n2(0);
    for (const auto& ai : a) n2 += ai.norm2();
    out.norm_factor = std::sqrt(n2.get_d());
    for (std::uint32_t mask : subsets_of_size(D.M() + 1, p)) {
        ExpPoly comp;
        for (int l = 0; l <= D.M(); ++l) {
            std::uint32_t bit = 1u << l;
            if (mask & bit) continue;
            if (a[l].is_zero()) continue;
            // W(v_l, v_J) with l moved to the front of the sorted subset
            int swaps = std::popcount(mask & (bit - 1));
            GaussRat s = (swaps % 2 == 0) ? a[l] : -a[l];
            comp = comp + s * D.subset_wronskian(mask | bit);
        }
        out.masks.push_back(mask);
        out.components.push_back(std::move(comp));
    }
    return out;
}

InteriorProduct interior_product_against(const DerivedCurveSet& D, int p,
                                         const HomogeneousPolynomial& Q) {
    return interior_product_against(D, p, D.basis().reduce(Q));
}

ContactValue contact_function(const DerivedCurveSet& D, int p, const InteriorProduct& ip,
                              const CDouble& z) {
    ContactValue out;
    out.p = p;
    double den = D.log_norm(p, z);
    if (!std::isfinite(den)) {
        out.degenerate = true;
        return out;
    }
    double num = ip.log_norm(z);
    out.value = std::isfinite(num) ? std::exp(num - den) : 0.0;
    return out;
}

} // namespace vdt
