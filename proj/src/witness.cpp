#include "toraut/witness.hpp"

#include <cassert>

#include "toraut/errors.hpp"
#include "toraut/rational.hpp"

namespace toraut {

std::vector<std::size_t> independent_columns(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> picked;
    // Incremental elimination state: reduced columns of the chosen set.
    std::vector<std::vector<Rat>> basis;
    std::vector<std::size_t> pivot_row;
    for (std::size_t j = 0; j < m.cols() && picked.size() < n; ++j) {
        std::vector<Rat> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = Rat(m(i, j));
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rat f = col[pivot_row[b]];
            if (f == 0) continue;
            for (std::size_t i = 0; i < n; ++i) col[i] -= f * basis[b][i];
        }
        std::size_t pr = n;
        for (std::size_t i = 0; i < n; ++i)
            if (col[i] != 0) {
                pr = i;
                break;
            }
        if (pr == n) continue;
        const Rat piv = col[pr];
        for (std::size_t i = 0; i < n; ++i) col[i] /= piv;
        basis.push_back(std::move(col));
        pivot_row.push_back(pr);
        picked.push_back(j);
    }
    return picked;
}

std::optional<IntMatrix> solve_unimodular_witness(const IntMatrix& v, const IntMatrix& vp) {
    if (v.rows() != vp.rows() || v.cols() != vp.cols())
        throw input_error("witness solve: shape mismatch between ray matrices");
    const std::size_t n = v.rows(), r = v.cols();

    const std::vector<std::size_t> b = independent_columns(v);
    if (b.size() != n)
        throw input_error("witness solve requires a full-row-rank ray matrix");

    IntMatrix vb(n, n), vpb(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            vb(i, k) = v(i, b[k]);
            vpb(i, k) = vp(i, b[k]);
        }
    const auto vb_inv = rat_inverse(vb);
    assert(vb_inv.has_value());

    // L = vpb * vb^{-1}; reject unless integral.
    IntMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat s(0);
            for (std::size_t k = 0; k < n; ++k) s += Rat(vpb(i, k)) * (*vb_inv)[k][j];
            if (boost::multiprecision::denominator(s) != 1) return std::nullopt;
            l(i, j) = boost::multiprecision::numerator(s);
        }

    // The basis columns pinned L; the full system must still agree.
    if (l * v != vp) return std::nullopt;
    if (!is_unimodular(l)) return std::nullopt;
    return l;
}

} // namespace toraut
