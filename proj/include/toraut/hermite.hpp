#pragma once

#include "toraut/int_matrix.hpp"

namespace toraut {

// A sublattice of Z^ambient given by its canonical basis: row echelon
// form with positive pivots and the entries above each pivot reduced
// into [0, pivot). Two matrices generate the same row lattice iff their
// canonical bases are identical.
struct RowLattice {
    std::size_t ambient = 0;
    IntMatrix basis; // rank x ambient, no zero rows

    std::size_t rank() const { return basis.rows(); }
    bool operator==(const RowLattice& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
};

// Canonical Hermite basis of the lattice spanned by the rows of `a`.
RowLattice hermite_row_basis(const IntMatrix& a);

std::size_t rank_of(const IntMatrix& a);

// Row lattices of `a` and `b` coincide. Throws on ambient mismatch.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

// Membership of v in the lattice, by reduction against the Hermite basis.
bool lattice_contains(const RowLattice& l, const IntVec& v);

} // namespace toraut
