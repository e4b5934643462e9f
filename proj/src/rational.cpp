#include "toraut/rational.hpp"

namespace toraut {

std::optional<RatMatrix> rat_inverse(const IntMatrix& a) {
    const std::size_t n = a.rows();
    RatMatrix m(n, std::vector<Rat>(n));
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a(i, j));
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[k]);
        std::swap(inv[p], inv[k]);
        const Rat piv = m[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            const Rat f = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

} // namespace toraut
