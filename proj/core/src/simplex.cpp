#include "crn/simplex.hpp"

#include <cassert>

namespace crn {

std::optional<std::vector<Rat>> feasible_point(const RationalMatrix& A,
                                               const std::vector<Rat>& b) {
    const int m = A.rows();
    const int n = A.cols();
    assert(static_cast<int>(b.size()) == m);

    // Tableau: n structural columns, m artificial columns, rhs.
    // Artificials form the starting basis; minimize their sum.
    const int cols = n + m + 1;
    const int rhs = n + m;
    RationalMatrix t(m + 1, cols);
    std::vector<int> basis(m);

    for (int i = 0; i < m; ++i) {
        int row_sign = sign(b[i]) < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) t.at(i, j) = row_sign * A.at(i, j);
        t.at(i, rhs) = row_sign * b[i];
        t.at(i, n + i) = 1;
        basis[i] = n + i;
    }
    // Reduced-cost row for cost = sum of artificials: subtract each
    // constraint row so basic columns read zero.
    for (int j = 0; j < cols; ++j) {
        Rat s = 0;
        for (int i = 0; i < m; ++i) s += t.at(i, j);
        t.at(m, j) = (j >= n && j < n + m ? Rat(1) : Rat(0)) - s;
    }

    for (;;) {
        // Bland: entering column is the lowest index with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (t.at(m, j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        // Ratio test; ties broken by smallest basis variable (Bland).
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t.at(i, enter) <= 0) continue;
            Rat ratio = t.at(i, rhs) / t.at(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        assert(leave >= 0);  // phase-one objective is bounded below

        Rat piv = t.at(leave, enter);
        for (int j = 0; j < cols; ++j) t.at(leave, j) /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || t.at(i, enter) == 0) continue;
            Rat f = t.at(i, enter);
            for (int j = 0; j < cols; ++j) t.at(i, j) -= f * t.at(leave, j);
        }
        basis[leave] = enter;
    }

    // Optimal objective equals sum of basic artificial values.
    Rat objective = 0;
    for (int i = 0; i < m; ++i) {
        if (basis[i] >= n) objective += t.at(i, rhs);
    }
    if (objective != 0) return std::nullopt;

    std::vector<Rat> x(n);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] = t.at(i, rhs);
    }
    return x;
}

}  // namespace crn
