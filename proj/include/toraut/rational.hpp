#pragma once

#include <optional>
#include <vector>

#include "toraut/int_matrix.hpp"

namespace toraut {

using RatMatrix = std::vector<std::vector<Rat>>;

// Gauss-Jordan inverse over Q; nullopt when singular.
std::optional<RatMatrix> rat_inverse(const IntMatrix& a);

} // namespace toraut
