#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "toraut/integers.hpp"

namespace toraut {

// Dense integer matrix, row-major, exact entries. Empty dimensions
// (0 x k, k x 0) are legal and follow the usual algebraic conventions.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    void set_row(std::size_t i, const IntVec& v);

    IntMatrix transpose() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row i += c * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    // col i += c * col j
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& v);

// Exact determinant via fraction-free (Bareiss) elimination; det of the
// empty 0 x 0 matrix is 1.
Int determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

} // namespace toraut
