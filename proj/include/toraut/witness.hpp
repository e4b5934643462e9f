#pragma once

#include <optional>

#include "toraut/int_matrix.hpp"

namespace toraut {

// Unique rational solution L of L * v = vp for full-row-rank v (both
// n x r), returned only when L is integral with determinant +-1.
// Inconsistent or non-unimodular systems yield nullopt; rank(v) < n is a
// precondition violation and throws.
std::optional<IntMatrix> solve_unimodular_witness(const IntMatrix& v, const IntMatrix& vp);

// Indices of a maximal set of linearly independent columns, scanned left
// to right (exact rational elimination).
std::vector<std::size_t> independent_columns(const IntMatrix& m);

} // namespace toraut
