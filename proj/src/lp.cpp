#include "gnb/lp.hpp"

#include "gnb/errors.hpp"

namespace gnb {

PackingSolution solve_packing_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                                 const std::vector<Rational>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw InvalidInput("LP right-hand side has wrong length");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidInput("LP constraint row has wrong length");
    for (const auto& bi : b)
        if (bi < 0) throw InvalidInput("LP right-hand side must be nonnegative");

    // Columns 0..n-1 structural, n..n+m-1 slack, n+m is the right-hand side.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][width - 1] = b[i];
    }
    std::vector<Rational> obj(width);
    for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];
    std::vector<std::size_t> basic(m);
    for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;

    PackingSolution sol;
    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basic[i] < basic[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) throw InvalidInput("LP is unbounded");

        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        if (obj[enter] != 0) {
            const Rational f = obj[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) obj[j] -= f * t[leave][j];
        }
        basic[leave] = enter;
        ++sol.pivots;
    }

    sol.value = obj[width - 1];
    sol.primal.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basic[i] < n) sol.primal[basic[i]] = t[i][width - 1];
    sol.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) sol.dual[i] = obj[n + i];
    return sol;
}

}  // namespace gnb
