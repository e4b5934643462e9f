#pragma once

#include <utility>

#include "toraut/cone.hpp"
#include "toraut/hermite.hpp"
#include "toraut/smith.hpp"

namespace toraut {

// Element of Cl(X) in the canonical coordinates of its ClassGroup:
// free part in Z^f, torsion residues t_i in [0, d_i). Equality is
// coordinate equality within one group frame.
struct ClassElement {
    IntVec free_part;
    IntVec torsion_part;

    bool is_zero() const;
    bool operator==(const ClassElement& o) const {
        return free_part == o.free_part && torsion_part == o.torsion_part;
    }
    bool operator!=(const ClassElement& o) const { return !(*this == o); }
    bool operator<(const ClassElement& o) const {
        if (free_part != o.free_part) return free_part < o.free_part;
        return torsion_part < o.torsion_part;
    }
};

// Cl(X) = Z^r / Λ, Λ the lattice of divisors of characters. The frame is
// one fixed Smith decomposition of the ray-row matrix, shared by every
// element of the group.
class ClassGroup {
public:
    ClassGroup() = default;
    explicit ClassGroup(const Cone& c);

    std::size_t ray_count() const { return r_; }
    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    const RowLattice& relation_lattice() const { return relations_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    // Group order; 0 means infinite.
    Int order() const;

    // Canonical coordinates of sum coeffs_i * [D_i].
    ClassElement class_of(const IntVec& coeffs) const;

    ClassElement zero() const;
    ClassElement add(const ClassElement& a, const ClassElement& b) const;
    ClassElement negate(const ClassElement& a) const;
    // Order of the element; 0 means infinite.
    Int element_order(const ClassElement& e) const;

private:
    std::size_t r_ = 0;
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;              // invariant factors >= 2
    std::vector<std::size_t> torsion_rows_; // rows of the projector for torsion coords
    IntMatrix projector_;                   // `left` of the SNF of ray_rows
    RowLattice relations_;                  // Λ ⊂ Z^r
};

// Cl(X) together with the classes [D_1], ..., [D_r] of the invariant
// prime divisors (images of the standard basis of Z^r). Degenerate cones
// are allowed: the presentation is still the cokernel of the ray rows.
std::pair<ClassGroup, std::vector<ClassElement>> class_group(const Cone& c);

} // namespace toraut
