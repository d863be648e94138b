#include "vdt/lp.hpp"

#include <stdexcept>

namespace vdt {

namespace {

// dense simplex tableau with Bland's anti-cycling rule
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols),
        t_(rows + 1, std::vector<Rat>(cols + 1, Rat(0))) {}

    std::vector<std::vector<Rat>> t_; // last row: objective; last col: rhs
    std::size_t m_, n_;
    std::vector<std::size_t> basis_;

    // pivot on (r, c)
    void pivot(std::size_t r, std::size_t c) {
        Rat inv = 1 / t_[r][c];
        for (auto& v : t_[r]) v *= inv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r) continue;
            if (t_[i][c] == 0) continue;
            Rat f = t_[i][c];
            for (std::size_t j = 0; j <= n_; ++j) t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    // Bland: entering = lowest-index improving column
    bool step() {
        std::size_t enter = n_;
        for (std::size_t j = 0; j < n_; ++j)
            if (t_[m_][j] > 0) {
                enter = j;
                break;
            }
        if (enter == n_) return false; // optimal
        std::size_t leave = m_;
        for (std::size_t i = 0; i < m_; ++i) {
            if (t_[i][enter] <= 0) continue;
            if (leave == m_) {
                leave = i;
                continue;
            }
            Rat cur = t_[i][n_] / t_[i][enter];
            Rat best = t_[leave][n_] / t_[leave][enter];
            if (cur < best || (cur == best && basis_[i] < basis_[leave])) leave = i;
        }
        if (leave == m_) throw std::runtime_error("lp: unbounded");
        pivot(leave, enter);
        return true;
    }
};

} // namespace

LPSolution solve_lp(const LinearProgram& lp) {
    const std::size_t m = lp.A.size();
    const std::size_t n = lp.c.size();
    LPSolution sol;

    // phase 1: slacks + artificials where b < 0
    // variables: x (n) | slack (m) | artificial (count of negative b rows)
    std::size_t n_art = 0;
    for (const auto& bi : lp.b)
        if (bi < 0) ++n_art;

    std::size_t total = n + m + n_art;
    Tableau T(m, total);
    T.basis_.assign(m, 0);
    std::size_t art = n + m;
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = lp.b[i] < 0;
        Rat sgn = neg ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) T.t_[i][j] = sgn * lp.A[i][j];
        T.t_[i][n + i] = sgn; // slack
        T.t_[i][total] = sgn * lp.b[i];
        if (neg) {
            T.t_[i][art] = 1;
            T.basis_[i] = art;
            ++art;
        } else {
            T.basis_[i] = n + i;
        }
    }

    if (n_art > 0) {
        // phase-1 objective: maximize -(sum of artificials)
        for (std::size_t i = 0; i < m; ++i)
            if (T.basis_[i] >= n + m)
                for (std::size_t j = 0; j <= total; ++j) T.t_[m][j] += T.t_[i][j];
        for (std::size_t j = n + m; j < total; ++j) T.t_[m][j] = 0;
        while (T.step()) {}
        if (T.t_[m][total] != 0) {
            sol.feasible = false;
            return sol;
        }
        // drive leftover artificials out of the basis
        for (std::size_t i = 0; i < m; ++i) {
            if (T.basis_[i] < n + m) continue;
            std::size_t enter = total;
            for (std::size_t j = 0; j < n + m; ++j)
                if (T.t_[i][j] != 0) {
                    enter = j;
                    break;
                }
            if (enter < total) T.pivot(i, enter);
        }
        for (std::size_t j = 0; j <= total; ++j) T.t_[m][j] = 0;
    }

    // phase 2 objective
    for (std::size_t j = 0; j < n; ++j) T.t_[m][j] = lp.c[j];
    // express objective over the current basis
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t bj = T.basis_[i];
        if (bj < total && T.t_[m][bj] != 0) {
            Rat f = T.t_[m][bj];
            for (std::size_t j = 0; j <= total; ++j) T.t_[m][j] -= f * T.t_[i][j];
        }
    }
    try {
        while (T.step()) {}
    } catch (const std::runtime_error&) {
        sol.feasible = true;
        sol.bounded = false;
        return sol;
    }

    sol.feasible = true;
    sol.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (T.basis_[i] < n) sol.x[T.basis_[i]] = T.t_[i][total];
    sol.objective = -T.t_[m][total];
    return sol;
}

} // namespace vdt
