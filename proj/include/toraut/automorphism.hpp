#pragma once

#include <optional>
#include <string>

#include "toraut/class_group.hpp"
#include "toraut/cone.hpp"

namespace toraut {

// Hard default cap on the number of rays for permutation enumeration.
inline constexpr std::size_t kDefaultCap = 10;

// tau[i] = image of i, 0-based.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t r);

// A ray permutation realized by a cone-preserving lattice automorphism:
// witness * v_i = v_{tau[i]} with witness in GL_n(Z). The witness is
// unique because the rays span Q^n.
struct AdmissiblePermutation {
    Permutation tau;
    IntMatrix witness;
};

// All admissible permutations of a full-dimensional pointed cone, sorted
// by tau lexicographically. They form a subgroup of S_r. Enumeration
// walks the images of a column basis of V, so the cost is r^n rather
// than r!. `jobs` > 1 splits the candidate scan across threads; the
// result is deterministic regardless.
std::vector<AdmissiblePermutation> admissible_permutations(const Cone& c,
                                                           std::size_t cap = kDefaultCap,
                                                           unsigned jobs = 1);

// All tau in S_r that induce an automorphism of Cl(X) via
// [D_i] -> [D_{tau(i)}], i.e. with P_tau * Λ = Λ for the relation
// lattice Λ. Sorted lexicographically.
std::vector<Permutation> class_admissible_permutations(const Cone& c, const ClassGroup& g,
                                                       std::size_t cap = kDefaultCap);

// A class automorphism arising from a ray permutation, identified by its
// image tuple (the tuple determines the automorphism since the [D_i]
// generate Cl(X)). tau is the lexicographically least representative.
struct InducedClassAutomorphism {
    Permutation tau;
    std::vector<ClassElement> images; // images[i] = [D_{tau(i)}]
};

// The component group Aut(X)/Aut(X)^0 of a non-degenerate affine toric
// variety: the automorphisms of Cl(X) permuting the classes of the
// invariant prime divisors. Finite, of order at most r!.
struct ComponentGroup {
    std::vector<InducedClassAutomorphism> elements; // identity first
    // table[i][j] = index of elements[i] ∘ elements[j] (j applied first)
    std::vector<std::vector<std::size_t>> table;
    std::size_t order = 1;
    bool abelian = true;
    std::string name;                        // small-group catalog label
    std::vector<std::size_t> element_orders; // aligned with elements
};

ComponentGroup component_group(const Cone& c, std::size_t cap = kDefaultCap);

enum class Connectedness { Connected, NotConnected, NotConnectedDegenerate };

std::string to_string(Connectedness s);

struct VerdictWitness {
    AdmissiblePermutation perm;
    std::vector<std::size_t> moved; // ray indices i with [D_i] != [D_{tau(i)}]
};

struct Verdict {
    Connectedness status = Connectedness::Connected;
    std::optional<VerdictWitness> witness; // present iff NotConnected
    std::string neutral_component_note;
};

// Connectedness of Aut(X). Degenerate cones short-circuit to
// NotConnectedDegenerate before any enumeration. For full-dimensional
// cones the verdict is computed from the lattice-witness criterion and
// cross-checked against the class-automorphism criterion; the two must
// agree.
Verdict connectedness_verdict(const Cone& c, std::size_t cap = kDefaultCap, unsigned jobs = 1);

// Partition of the ray indices into blocks of equal divisor class,
// ordered by smallest member. 0-based.
std::vector<std::vector<std::size_t>> class_blocks(const Cone& c);

// |component group| versus |Aut(N,σ)| / |class-preserving part|; the two
// counts agree for every full-dimensional pointed cone.
struct RemarkIdentity {
    std::size_t lhs = 0; // component group order
    std::size_t rhs = 0; // admissible_order / kernel_order
    bool equal = false;
    std::size_t admissible_order = 0;
    std::size_t kernel_order = 0;
};

RemarkIdentity remark_order_identity(const Cone& c, std::size_t cap = kDefaultCap,
                                     unsigned jobs = 1);

// Structure of the neutral component seen through the Cox grading: one
// GL(n_i) factor per class block, extended by translations exactly when
// the block's class is zero.
struct NeutralComponentBlock {
    std::vector<std::size_t> indices; // 0-based ray indices
    ClassElement degree;
    bool zero_degree = false;
};

struct NeutralComponentSummary {
    std::string kernel_statement;
    std::vector<NeutralComponentBlock> blocks;
    std::vector<ClassElement> grading; // deg(T_i) = [D_i]
    std::string text() const;
};

NeutralComponentSummary neutral_component_summary(const Cone& c);

// Catalog label for groups of order <= 12, keyed by order, abelianness
// and the element-order multiset; larger groups get "order N".
std::string small_group_name(std::size_t order, bool abelian,
                             const std::vector<std::size_t>& element_orders);

} // namespace toraut
