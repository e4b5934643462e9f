#pragma once

#include "toraut/int_matrix.hpp"

namespace toraut {

// Exact feasibility of { x >= 0 rational : a * x = b }, decided by a
// phase-one simplex over Rat with Bland's rule (terminating, no floats).
bool nonneg_feasible(const IntMatrix& a, const IntVec& b);

} // namespace toraut
