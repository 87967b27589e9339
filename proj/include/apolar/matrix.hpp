#pragma once

#include "apolar/field.hpp"

#include <cstddef>
#include <vector>

namespace apolar {

using Vec = std::vector<Scalar>;

// Dense matrix of exact field elements. Rank and kernel are exact; over ℚ the
// forward elimination is fraction-free (Bareiss), over GF(p) plain Gaussian
// elimination. Pivots are chosen as the first nonzero entry in column order,
// so results are deterministic for a fixed input.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
        : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    static ExactMatrix from_columns(const std::vector<Vec>& cols, std::size_t dim, FieldSpec field);
    static ExactMatrix identity(std::size_t n, FieldSpec field);

    ExactMatrix transposed() const;
    Vec multiply(const Vec& v) const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> entries_;
};

std::size_t rank(const ExactMatrix& m);

// Basis of {v : Mv = 0}; size is cols − rank. Every returned vector satisfies
// Mv = 0 exactly (asserted in debug builds).
std::vector<Vec> kernel_basis(const ExactMatrix& m);

// Maximal linearly independent subset of the given vectors, reduced to a
// canonical (reduced row echelon) basis of their span.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim, FieldSpec field);

struct SubspaceDims {
    std::size_t d1 = 0;    // dim span(B1)
    std::size_t d2 = 0;    // dim span(B2)
    std::size_t dsum = 0;  // dim span(B1 ∪ B2)
    std::size_t dint = 0;  // d1 + d2 − dsum
};

// Dimensions of two spans, their sum and intersection. Throws
// DimensionMismatchError if the vectors do not live in one space.
SubspaceDims subspace_dims(const std::vector<Vec>& b1, const std::vector<Vec>& b2,
                           std::size_t dim, FieldSpec field);

}  // namespace apolar
