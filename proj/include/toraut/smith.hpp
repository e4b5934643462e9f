#pragma once

#include "toraut/int_matrix.hpp"

namespace toraut {

// Smith normal form data for an r x c integer matrix A:
//   diag = left * A * right,
// left (r x r) and right (c x c) unimodular, diag diagonal with
// invariants d_1 | d_2 | ... | d_k, d_i >= 1, k = rank(A).
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix diag;
    IntMatrix right;
    std::vector<Int> invariants;

    std::size_t rank() const { return invariants.size(); }
};

// Deterministic SNF with minimum-absolute-value pivot selection.
// Rows of `left` beyond rank(A) are sign-normalized (first nonzero entry
// positive) so that cokernel coordinates derived from `left` are canonical.
SmithDecomposition smith_normal_form(const IntMatrix& a);

} // namespace toraut
