#pragma once

#include "toraut/automorphism.hpp"
#include "toraut/cone.hpp"

namespace toraut {

// Normal form of a non-degenerate affine toric surface: some unimodular
// basis change maps the two rays to (0,1) and (b,-a) with b >= 1,
// 0 <= a < b, gcd(a,b) = 1. The residual ray-order ambiguity swaps a
// with its inverse mod b; the stored a is the smaller of the two.
struct SurfaceNormalForm {
    Int a;
    Int b;
    IntMatrix basis_change; // maps the input rays onto {(0,1),(b,-a)}
};

SurfaceNormalForm surface_normal_form(const Cone& c);

// Closed-form criterion: Aut(X) is connected iff a = 1, b = 1, or
// a^2 != 1 (mod b). Cl(X) = Z/b with [D1] = a, [D2] = 1; the component
// group has order 2 in the non-connected case.
struct SurfaceVerdict {
    Connectedness status = Connectedness::Connected;
    std::size_t component_group_order = 1;
    Int cl_order;  // b
    Int class_d1;  // a
    Int class_d2;  // 1 (0 when b = 1)
};

SurfaceVerdict surface_verdict(const SurfaceNormalForm& f);

// In the non-connected case the swap of the two rays is realized by
//   (1,0) -> (a, (1-a^2)/b),  (0,1) -> (b, -a)
// in the normal-form basis; verifies integrality, unimodularity and that
// the operator exchanges the rays. Throws in the connected case.
bool remark_operator_check(const SurfaceNormalForm& f);

} // namespace toraut
