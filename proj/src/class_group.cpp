#include "toraut/class_group.hpp"

#include "toraut/errors.hpp"

namespace toraut {

bool ClassElement::is_zero() const {
    for (const Int& x : free_part)
        if (x != 0) return false;
    for (const Int& x : torsion_part)
        if (x != 0) return false;
    return true;
}

ClassGroup::ClassGroup(const Cone& c) {
    r_ = c.ray_count();

    // Relations on [D_1],...,[D_r] are spanned by the rows of V: row j
    // collects the pairings <v_i, e_j> over all rays.
    relations_ = hermite_row_basis(c.ray_matrix());

    const SmithDecomposition s = smith_normal_form(c.ray_rows());
    projector_ = s.left;
    free_rank_ = r_ - s.rank();
    for (std::size_t i = 0; i < s.rank(); ++i)
        if (s.invariants[i] >= 2) {
            torsion_.push_back(s.invariants[i]);
            torsion_rows_.push_back(i);
        }
}

Int ClassGroup::order() const {
    if (free_rank_ > 0) return 0;
    Int n = 1;
    for (const Int& d : torsion_) n *= d;
    return n;
}

ClassElement ClassGroup::class_of(const IntVec& coeffs) const {
    if (coeffs.size() != r_)
        throw input_error("divisor coefficient vector has wrong length");
    ClassElement e;
    e.torsion_part.resize(torsion_.size());
    for (std::size_t k = 0; k < torsion_.size(); ++k) {
        const std::size_t row = torsion_rows_[k];
        Int y = 0;
        for (std::size_t j = 0; j < r_; ++j) y += projector_(row, j) * coeffs[j];
        e.torsion_part[k] = mod_floor(y, torsion_[k]);
    }
    const std::size_t rank = r_ - free_rank_;
    e.free_part.resize(free_rank_);
    for (std::size_t k = 0; k < free_rank_; ++k) {
        const std::size_t row = rank + k;
        Int y = 0;
        for (std::size_t j = 0; j < r_; ++j) y += projector_(row, j) * coeffs[j];
        e.free_part[k] = y;
    }
    return e;
}

ClassElement ClassGroup::zero() const {
    ClassElement e;
    e.free_part.assign(free_rank_, Int(0));
    e.torsion_part.assign(torsion_.size(), Int(0));
    return e;
}

ClassElement ClassGroup::add(const ClassElement& a, const ClassElement& b) const {
    ClassElement e;
    e.free_part.resize(free_rank_);
    for (std::size_t i = 0; i < free_rank_; ++i) e.free_part[i] = a.free_part[i] + b.free_part[i];
    e.torsion_part.resize(torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        e.torsion_part[i] = mod_floor(a.torsion_part[i] + b.torsion_part[i], torsion_[i]);
    return e;
}

ClassElement ClassGroup::negate(const ClassElement& a) const {
    ClassElement e;
    e.free_part.resize(free_rank_);
    for (std::size_t i = 0; i < free_rank_; ++i) e.free_part[i] = -a.free_part[i];
    e.torsion_part.resize(torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        e.torsion_part[i] = mod_floor(-a.torsion_part[i], torsion_[i]);
    return e;
}

Int ClassGroup::element_order(const ClassElement& e) const {
    for (const Int& x : e.free_part)
        if (x != 0) return 0;
    Int ord = 1;
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        ord = lcm_int(ord, torsion_[i] / gcd_int(torsion_[i], e.torsion_part[i]));
    return ord;
}

std::pair<ClassGroup, std::vector<ClassElement>> class_group(const Cone& c) {
    ClassGroup g(c);
    std::vector<ClassElement> classes;
    classes.reserve(c.ray_count());
    IntVec e(c.ray_count(), Int(0));
    for (std::size_t i = 0; i < c.ray_count(); ++i) {
        e[i] = 1;
        classes.push_back(g.class_of(e));
        e[i] = 0;
    }
    return {std::move(g), std::move(classes)};
}

} // namespace toraut
