#pragma once

#include "vdt/rational.hpp"

#include <vector>

namespace vdt {

/// Incremental exact row space over the Gaussian rationals. Rows are added
/// one at a time; each independent row is kept in echelon form together with
/// its expression in terms of the original rows, so membership queries can
/// return exact coordinates.
class ExactRowSpace {
public:
    explicit ExactRowSpace(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    struct Reduction {
        std::vector<GaussRat> residual;     // input minus its projection
        std::vector<GaussRat> combination;  // coefficients over original added rows
        bool in_span = false;
    };

    /// Reduce v against the current span without modifying it.
    Reduction reduce(std::vector<GaussRat> v) const {
        Reduction out;
        out.combination.assign(n_added_, GaussRat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const GaussRat& lead = v[pivots_[i]];
            if (lead.is_zero()) continue;
            GaussRat f = lead; // echelon rows are pivot-normalized
            for (std::size_t c = 0; c < width_; ++c) v[c] -= f * rows_[i][c];
            for (std::size_t c = 0; c < n_added_; ++c) out.combination[c] += f * track_[i][c];
        }
        out.in_span = true;
        for (const auto& a : v)
            if (!a.is_zero()) {
                out.in_span = false;
                break;
            }
        out.residual = std::move(v);
        return out;
    }

    /// Add a row; returns true when it enlarged the span.
    bool add(std::vector<GaussRat> v) {
        Reduction red = reduce(std::move(v));
        std::size_t idx = n_added_++;
        for (auto& t : track_) t.push_back(GaussRat(0));
        if (red.in_span) return false;
        std::size_t p = 0;
        while (red.residual[p].is_zero()) ++p;
        GaussRat inv = GaussRat(1) / red.residual[p];
        for (auto& a : red.residual) a *= inv;
        std::vector<GaussRat> tr(n_added_, GaussRat(0));
        for (std::size_t c = 0; c < red.combination.size(); ++c) tr[c] = -inv * red.combination[c];
        tr[idx] = inv;
        rows_.push_back(std::move(red.residual));
        pivots_.push_back(p);
        track_.push_back(std::move(tr));
        return true;
    }

private:
    std::size_t width_;
    std::size_t n_added_ = 0;
    std::vector<std::vector<GaussRat>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<GaussRat>> track_;
};

/// Exact rank of a list of vectors.
inline std::size_t exact_rank(const std::vector<std::vector<GaussRat>>& rows, std::size_t width) {
    ExactRowSpace sp(width);
    for (const auto& r : rows) sp.add(r);
    return sp.rank();
}

} // namespace vdt
