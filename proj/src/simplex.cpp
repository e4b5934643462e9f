#include "toraut/simplex.hpp"

#include <vector>

#include "toraut/errors.hpp"

namespace toraut {

bool nonneg_feasible(const IntMatrix& a, const IntVec& b) {
    if (a.rows() != b.size())
        throw input_error("feasibility: right-hand side length mismatch");
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0) return true;

    // Tableau rows: [ x columns | artificial columns | rhs ], rhs >= 0.
    const std::size_t total = n + m;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(total + 1, Rat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rat(-a(i, j)) : Rat(a(i, j));
        t[i][n + i] = 1;
        t[i][total] = flip ? Rat(-b[i]) : Rat(b[i]);
        basis[i] = n + i;
    }

    // Objective: minimize the sum of artificials. Reduced-cost row with
    // the artificial basis priced out; z[total] holds -objective.
    std::vector<Rat> z(total + 1, Rat(0));
    for (std::size_t j = 0; j < m; ++j) z[n + j] = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= total; ++j) z[j] -= t[i][j];

    for (;;) {
        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter == total) break;

        // Ratio test, ties broken by smallest basis variable.
        std::size_t leave = m;
        Rat best(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rat ratio = t[i][total] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break; // cannot happen: objective bounded below by 0

        const Rat piv = t[leave][enter];
        for (std::size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rat f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        const Rat fz = z[enter];
        if (fz != 0)
            for (std::size_t j = 0; j <= total; ++j) z[j] -= fz * t[leave][j];
        basis[leave] = enter;
    }

    // Optimal value is -z[total]; feasible iff it vanished.
    return z[total] == 0;
}

} // namespace toraut
