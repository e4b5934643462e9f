#pragma once

#include <string>
#include <vector>

#include "toraut/int_matrix.hpp"

namespace toraut {

// A strongly convex rational polyhedral cone, given by the ordered list
// of its primitive ray generators in Z^n. Construction (build_cone)
// guarantees: primitive pairwise-distinct rays, every ray extreme, no
// line contained in the cone.
struct Cone {
    std::size_t n = 0; // lattice rank
    std::vector<IntVec> rays;

    std::size_t ray_count() const { return rays.size(); }
    // n x r matrix V with the rays as columns.
    IntMatrix ray_matrix() const;
    // r x n matrix with the rays as rows (the transpose of V).
    IntMatrix ray_rows() const;
};

struct RejectedRay {
    IntVec ray;
    std::string reason;
};

struct ConeValidationReport {
    bool pointed = false;
    bool full_dimensional = false;
    std::size_t rank = 0;
    std::vector<IntVec> normalized_rays;
    std::vector<RejectedRay> rejected_rays;
};

struct BuildResult {
    Cone cone;
    ConeValidationReport report;
};

// Normalize and validate ray generators. Rays are divided by their gcd;
// duplicates collapse with a warning; non-extreme generators are dropped
// (reduce = true) or rejected (reduce = false); pointedness is certified
// by exact infeasibility of { V x = 0, sum x = 1, x >= 0 }.
BuildResult build_cone(std::size_t n, const std::vector<IntVec>& raw_rays, bool reduce);

bool is_full_dimensional(const Cone& c);

struct DegenerateSplit {
    Cone reduced;       // full-dimensional cone in the saturated span
    std::size_t q = 0;  // torus-factor dimension n - rank(V)
};

// Split a non-full-dimensional cone: re-express the rays in a basis of
// the saturated sublattice span_Q(rays) ∩ Z^n. Throws when the cone is
// already full-dimensional.
DegenerateSplit split_degenerate(const Cone& c);

} // namespace toraut
