#pragma once

#include <cstddef>
#include <vector>

#include "orthovol/errors.hpp"
#include "orthovol/linalg.hpp"

namespace orthovol {

struct LpSolution {
    double objective = 0.0;
    Vector x;
};

/// Dense tableau simplex for  max c.x  s.t.  A x <= b,  x >= 0,  b >= 0.
///
/// The nonnegative right-hand side means the slack basis is feasible, so no
/// phase-one is needed. Bland's rule keeps degenerate problems (ours has
/// b mostly zero) from cycling. Problems here are at most a few dozen
/// variables, so the dense tableau is plenty.
inline LpSolution simplex_maximize(const Matrix& a, const Vector& b, const Vector& c) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    for (double bi : b)
        if (bi < 0.0) throw InvalidInput("simplex_maximize requires b >= 0");

    // tableau: m rows of [A | I | b], objective row [-c | 0 | 0]
    Matrix t(m + 1, n + m + 1);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t(i, j) = a(i, j);
        t(i, n + i) = 1.0;
        t(i, n + m) = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t(m, j) = -c[j];

    const double eps = 1e-11;
    bool optimal = false;
    for (std::size_t iter = 0; iter < 100000 && !optimal; ++iter) {
        // entering: lowest-index column with negative reduced cost (Bland)
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (t(m, j) < -eps) { enter = j; break; }
        }
        if (enter == n + m) {
            optimal = true;
            break;
        }

        // leaving: min ratio, ties by lowest basis index (Bland)
        std::size_t leave = m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t(i, enter) > eps) {
                double ratio = t(i, n + m) / t(i, enter);
                if (leave == m || ratio < best_ratio - eps ||
                    (ratio < best_ratio + eps && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m) throw InternalError("simplex_maximize: unbounded program");

        double piv = t(leave, enter);
        for (std::size_t j = 0; j <= n + m; ++j) t(leave, j) /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            double f = t(i, enter);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n + m; ++j) t(i, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
    }
    if (!optimal) throw InternalError("simplex_maximize: iteration limit reached");

    LpSolution sol;
    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) sol.x[basis[i]] = t(i, n + m);
    sol.objective = t(m, n + m);
    return sol;
}

}  // namespace orthovol
