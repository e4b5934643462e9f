#include "toraut/hermite.hpp"

#include "toraut/errors.hpp"

namespace toraut {

RowLattice hermite_row_basis(const IntMatrix& a) {
    const std::size_t n = a.cols();
    IntMatrix w = a;
    std::size_t cur = 0;
    for (std::size_t col = 0; col < n && cur < w.rows(); ++col) {
        // Euclidean reduction within this column, rows cur..end.
        for (;;) {
            std::size_t piv = w.rows();
            Int best = 0;
            for (std::size_t i = cur; i < w.rows(); ++i) {
                if (w(i, col) == 0) continue;
                const Int v = abs_int(w(i, col));
                if (piv == w.rows() || v < best) {
                    piv = i;
                    best = v;
                }
            }
            if (piv == w.rows()) break; // column already clear
            w.swap_rows(cur, piv);
            if (w(cur, col) < 0) w.negate_row(cur);
            bool clean = true;
            for (std::size_t i = cur + 1; i < w.rows(); ++i) {
                if (w(i, col) == 0) continue;
                const Int q = floor_div(w(i, col), w(cur, col));
                w.add_row_multiple(i, cur, -q);
                if (w(i, col) != 0) clean = false;
            }
            if (clean) {
                // Reduce entries above the pivot into [0, pivot).
                for (std::size_t i = 0; i < cur; ++i) {
                    const Int q = floor_div(w(i, col), w(cur, col));
                    w.add_row_multiple(i, cur, -q);
                }
                ++cur;
                break;
            }
        }
    }
    RowLattice l;
    l.ambient = n;
    l.basis = IntMatrix(cur, n);
    for (std::size_t i = 0; i < cur; ++i) l.basis.set_row(i, w.row(i));
    return l;
}

std::size_t rank_of(const IntMatrix& a) { return hermite_row_basis(a).rank(); }

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols())
        throw input_error("lattice comparison with mismatched ambient dimension");
    return hermite_row_basis(a) == hermite_row_basis(b);
}

bool lattice_contains(const RowLattice& l, const IntVec& v) {
    if (v.size() != l.ambient)
        throw input_error("lattice membership with mismatched ambient dimension");
    IntVec w = v;
    std::size_t row = 0;
    for (std::size_t col = 0; col < l.ambient; ++col) {
        if (row < l.basis.rows() && l.basis(row, col) != 0) {
            const Int& p = l.basis(row, col);
            if (w[col] % p != 0) return false;
            const Int q = w[col] / p;
            for (std::size_t j = col; j < l.ambient; ++j) w[j] -= q * l.basis(row, j);
            ++row;
        } else if (w[col] != 0) {
            return false;
        }
    }
    return true;
}

} // namespace toraut
