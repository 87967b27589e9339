#include "apolar/matrix.hpp"

#include "apolar/errors.hpp"

#include <cassert>
#include <utility>

namespace apolar {

ExactMatrix ExactMatrix::from_columns(const std::vector<Vec>& cols, std::size_t dim,
                                      FieldSpec field) {
    ExactMatrix m(dim, cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim) {
            throw DimensionMismatchError("from_columns: vector length " +
                                         std::to_string(cols[j].size()) + " != " +
                                         std::to_string(dim));
        }
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n, FieldSpec field) {
    ExactMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec ExactMatrix::multiply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatchError("multiply: shape mismatch");
    Vec out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// Clears denominators so Bareiss works on integers.
void scale_row_to_integers(Vec& row, FieldSpec field) {
    BigInt l = 1;
    for (const Scalar& s : row) l = lcm(l, denominator(s.value()));
    if (l == 1) return;
    Scalar f(field, BigRational(l));
    for (Scalar& s : row) s = s * f;
}

// In-place row echelon form; returns pivot columns. Over ℚ: fraction-free
// Bareiss, intermediate entries stay integral and bounded by minors. Over
// GF(p): plain elimination. Pivot = first nonzero in column order.
std::vector<std::size_t> row_echelon(std::vector<Vec>& rows, FieldSpec field) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    const bool bareiss = field.kind == FieldKind::Rationals;
    if (bareiss)
        for (Vec& row : rows) scale_row_to_integers(row, field);

    Scalar prev = Scalar::one(field);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Scalar& p = rows[r][col];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            Scalar factor = rows[i][col];
            if (bareiss) {
                for (std::size_t j = col + 1; j < ncols; ++j)
                    rows[i][j] = (p * rows[i][j] - factor * rows[r][j]) / prev;
            } else if (!factor.is_zero()) {
                Scalar f = factor / p;
                for (std::size_t j = col + 1; j < ncols; ++j)
                    rows[i][j] -= f * rows[r][j];
            }
            rows[i][col] = Scalar::zero(field);
        }
        prev = p;
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<Vec> matrix_rows(const ExactMatrix& m) {
    std::vector<Vec> rows(m.rows(), Vec(m.cols(), Scalar::zero(m.field())));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

// Reduced row echelon form: eliminate above pivots and normalize them to 1.
std::vector<std::size_t> rref(std::vector<Vec>& rows, FieldSpec field) {
    std::vector<std::size_t> pivots = row_echelon(rows, field);
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t k = pivots.size(); k-- > 0;) {
        std::size_t pc = pivots[k];
        Scalar inv = rows[k][pc].inverse();
        for (std::size_t j = pc; j < ncols; ++j) rows[k][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            Scalar f = rows[i][pc];
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < ncols; ++j) rows[i][j] -= f * rows[k][j];
        }
    }
    return pivots;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
    std::vector<Vec> rows = matrix_rows(m);
    return row_echelon(rows, m.field()).size();
}

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
    const FieldSpec field = m.field();
    const std::size_t n = m.cols();
    std::vector<Vec> rows = matrix_rows(m);
    std::vector<std::size_t> pivots = row_echelon(rows, field);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, Scalar::zero(field));
        v[f] = Scalar::one(field);
        for (std::size_t k = pivots.size(); k-- > 0;) {
            std::size_t pc = pivots[k];
            if (pc > f) continue;  // those pivot vars stay zero
            Scalar acc = Scalar::zero(field);
            for (std::size_t j = pc + 1; j < n; ++j)
                if (!rows[k][j].is_zero() && !v[j].is_zero()) acc += rows[k][j] * v[j];
            v[pc] = -acc / rows[k][pc];
        }
        basis.push_back(std::move(v));
    }
#ifndef NDEBUG
    for (const Vec& v : basis)
        for (const Scalar& s : m.multiply(v)) assert(s.is_zero());
#endif
    return basis;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim, FieldSpec field) {
    std::vector<Vec> rows;
    for (const Vec& v : vectors) {
        if (v.size() != dim) throw DimensionMismatchError("span_basis: vector length mismatch");
        rows.push_back(v);
    }
    std::vector<std::size_t> pivots = rref(rows, field);
    rows.resize(pivots.size());
    return rows;
}

SubspaceDims subspace_dims(const std::vector<Vec>& b1, const std::vector<Vec>& b2,
                           std::size_t dim, FieldSpec field) {
    auto check = [dim](const std::vector<Vec>& b) {
        for (const Vec& v : b)
            if (v.size() != dim)
                throw DimensionMismatchError("subspace_dims: vector length mismatch");
    };
    check(b1);
    check(b2);
    std::vector<Vec> r1 = b1, r2 = b2;
    SubspaceDims out;
    out.d1 = row_echelon(r1, field).size();
    out.d2 = row_echelon(r2, field).size();
    std::vector<Vec> all = b1;
    all.insert(all.end(), b2.begin(), b2.end());
    out.dsum = row_echelon(all, field).size();
    out.dint = out.d1 + out.d2 - out.dsum;
    return out;
}

}  // namespace apolar
