#include "toraut/smith.hpp"

#include <cassert>

namespace toraut {

namespace {

// Locate the entry of minimum nonzero absolute value in the trailing
// submatrix S[t:, t:], scanning row-major (first hit wins ties).
bool min_abs_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            const Int a = abs_int(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    SmithDecomposition d;
    d.left = IntMatrix::identity(r);
    d.right = IntMatrix::identity(c);
    d.diag = a;
    IntMatrix& s = d.diag;

    const std::size_t steps = r < c ? r : c;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!min_abs_pivot(s, t, pi, pj)) break;
        s.swap_rows(t, pi);
        d.left.swap_rows(t, pi);
        s.swap_cols(t, pj);
        d.right.swap_cols(t, pj);

        for (;;) {
            // Reduce column t below the pivot; a nonzero remainder becomes
            // the new, strictly smaller pivot.
            bool again = false;
            for (std::size_t i = t + 1; i < r && !again; ++i) {
                if (s(i, t) == 0) continue;
                const Int q = floor_div(s(i, t), s(t, t));
                s.add_row_multiple(i, t, -q);
                d.left.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) {
                    s.swap_rows(t, i);
                    d.left.swap_rows(t, i);
                    again = true;
                }
            }
            if (again) continue;
            // Same for row t to the right of the pivot.
            for (std::size_t j = t + 1; j < c && !again; ++j) {
                if (s(t, j) == 0) continue;
                const Int q = floor_div(s(t, j), s(t, t));
                s.add_col_multiple(j, t, -q);
                d.right.add_col_multiple(j, t, -q);
                if (s(t, j) != 0) {
                    s.swap_cols(t, j);
                    d.right.swap_cols(t, j);
                    again = true;
                }
            }
            if (again) continue;
            // Pivot must divide every remaining entry for the divisibility
            // chain; fold an offending row into row t and re-eliminate.
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        d.left.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }

        if (s(t, t) < 0) {
            s.negate_row(t);
            d.left.negate_row(t);
        }
        d.invariants.push_back(s(t, t));
    }

    // Canonical sign for the free cokernel coordinates: rows of `left`
    // past the rank multiply zero rows of diag, so flipping them keeps
    // diag = left * a * right intact.
    for (std::size_t i = d.invariants.size(); i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (d.left(i, j) == 0) continue;
            if (d.left(i, j) < 0) d.left.negate_row(i);
            break;
        }
    }

    assert(d.diag == d.left * a * d.right);
    return d;
}

} // namespace toraut
