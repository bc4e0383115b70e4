#pragma once

#include "qdet/quaternion.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdet {

enum class Orientation { Row, Column };

class QVector {
public:
  QVector(std::vector<Quaternion> entries, Orientation orientation);

  std::size_t size() const noexcept { return entries_.size(); }
  Orientation orientation() const noexcept { return orientation_; }
  std::span<const Quaternion> entries() const noexcept { return entries_; }
  // 1-based.
  const Quaternion& operator()(std::size_t i) const {
    assert(i >= 1 && i <= entries_.size());
    return entries_[i - 1];
  }

  friend bool operator==(const QVector&, const QVector&) = default;

private:
  std::vector<Quaternion> entries_;
  Orientation orientation_;
};

// Dense row-major quaternion matrix. All indices taken by the public
// interface are 1-based.
class QMatrix {
public:
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_column(const QVector& v);
  static QMatrix from_row(const QVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const Quaternion> data() const noexcept { return entries_; }

  const Quaternion& operator()(std::size_t i, std::size_t j) const {
    assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
    return entries_[(i - 1) * cols_ + (j - 1)];
  }
  Quaternion& operator()(std::size_t i, std::size_t j) {
    assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
    return entries_[(i - 1) * cols_ + (j - 1)];
  }
  // Bounds-checked; throws Error(IndexOutOfRange).
  const Quaternion& at(std::size_t i, std::size_t j) const;

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;

  QMatrix& scale(const Rational& s);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Quaternion> entries_;
};

// Hermitian adjoint: (A*)_ij = conj(a_ji).
QMatrix adjoint(const QMatrix& a);

// Entry (i,j) is sum_k a_ik * b_kj with each product taken in that order.
// Throws Error(ShapeMismatch) when a.cols() != b.rows().
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);

// Throws Error(ShapeMismatch) for non-square input.
bool is_hermitian(const QMatrix& a);

// A.j(b): column j replaced with b. Orientation of b is not checked,
// only its length.
QMatrix replace_column(const QMatrix& a, std::size_t j, const QVector& b);
// Ai.(b): row i replaced with b.
QMatrix replace_row(const QMatrix& a, std::size_t i, const QVector& b);

// A^{ij}: row i and column j removed. Requires a square matrix with n >= 2.
QMatrix delete_row_col(const QMatrix& a, std::size_t i, std::size_t j);

// Rows and columns restricted to `indices` (1-based, ascending).
QMatrix principal_submatrix(const QMatrix& a, std::span<const std::size_t> indices);

// A*A and AA*.
inline QMatrix gram_left(const QMatrix& a) { return adjoint(a) * a; }
inline QMatrix gram_right(const QMatrix& a) { return a * adjoint(a); }

} // namespace qdet
