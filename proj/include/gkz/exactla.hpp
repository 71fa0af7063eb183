#pragma once

// Exact integer and rational linear algebra. No floating point in here.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gkz/error.hpp"

namespace gkz {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// num/den in lowest terms (mpq_class(num, den) does not reduce).
inline mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

using RatVector = std::vector<Rational>;

/// Dense row-major matrix. Works for Integer and Rational entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols_if_empty = 0) {
    if (rows.empty()) return Matrix(0, cols_if_empty);
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_)
        throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<T>> tmp;
    for (const auto& r : rows) {
      std::vector<T> row;
      for (long v : r) row.emplace_back(v);
      tmp.push_back(std::move(row));
    }
    return from_rows(tmp);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(std::span<const std::size_t> cols) const {
    Matrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
    return m;
  }

  Matrix select_rows(std::span<const std::size_t> rows) const {
    Matrix m(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(rows[k], c);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product shape");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product length");
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Rational dot(const RatVector& a, const RatVector& b) {
  return dot<Rational>(std::span<const Rational>(a), std::span<const Rational>(b));
}
inline Integer dot(const IntVector& a, const IntVector& b) {
  return dot<Integer>(std::span<const Integer>(a), std::span<const Integer>(b));
}

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
IntVector to_integer(std::span<const long> v);

/// Integer vector, if every entry of `v` has denominator one.
std::optional<IntVector> as_integer(const RatVector& v);

/// Smallest positive multiple of `v` with coprime integer entries. Zero stays zero.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);

bool is_zero(const RatVector& v);
bool is_zero(const IntVector& v);

/// U * M = H with U unimodular and H in row Hermite normal form
/// (pivots positive, entries above each pivot reduced into [0, pivot)).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};
HermiteForm row_hermite(const IntMatrix& m);

/// Rows form a Z-basis of {l in Z^N : A l = 0}, in Hermite normal form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Some integer gamma with A gamma = beta; NoIntegerSolution if beta is not in
/// the lattice spanned by the columns of A.
IntVector solve_particular(const IntMatrix& a, const IntVector& beta);

/// Exact inverse together with the determinant. Singular when det = 0.
struct SquareInverse {
  RatMatrix inverse;
  Integer det;
  bool unimodular() const { return det == 1 || det == -1; }
};
SquareInverse square_inverse(const IntMatrix& m);

Integer determinant(const IntMatrix& m);  // fraction-free Bareiss
Rational determinant(const RatMatrix& m);

/// Reduced row echelon form over Q; pivots chosen left to right.
struct RowEchelon {
  RatMatrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};
RowEchelon row_echelon(RatMatrix m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols);

/// Rows form a basis of {x : M x = 0}.
RatMatrix nullspace(const RatMatrix& m);

/// Any x with M x = b, if one exists.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Linear subspace of Q^n kept as an RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<RatVector>& spanning);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  bool contains(const RatVector& v) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace gkz
