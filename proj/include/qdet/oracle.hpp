#pragma once

// Independent cross-checks that do not use row or column determinants.
// Nothing in the solvers depends on this header.

#include "qdet/qmatrix.hpp"

#include <vector>

namespace qdet::oracle {

// re + im * sqrt(-1), exact.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {} // NOLINT

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

  friend ComplexRational operator+(const ComplexRational& x, const ComplexRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend ComplexRational operator-(const ComplexRational& x, const ComplexRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend ComplexRational operator*(const ComplexRational& x, const ComplexRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  // Throws Error(ZeroDivisor).
  friend ComplexRational operator/(const ComplexRational& x, const ComplexRational& y);
  ComplexRational operator-() const { return {-re, -im}; }

  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

class ComplexMatrix {
public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  // 1-based, like QMatrix.
  const ComplexRational& operator()(std::size_t i, std::size_t j) const {
    return entries_[(i - 1) * cols_ + (j - 1)];
  }
  ComplexRational& operator()(std::size_t i, std::size_t j) {
    return entries_[(i - 1) * cols_ + (j - 1)];
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ComplexRational> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// Throws Error(ShapeMismatch) for non-square input.
ComplexRational classical_det(const ComplexMatrix& m);

// 2n x 2n matrix replacing a0 + a1 i + a2 j + a3 k by
//   [ a0 + a1 s   a2 + a3 s ]
//   [ -a2 + a3 s  a0 - a1 s ],  s = sqrt(-1).
ComplexMatrix complex_representation(const QMatrix& a);

// Reads a matrix whose entries lie in span{1, i} as a complex matrix.
// Throws Error(ShapeMismatch) if any entry has a j or k part.
ComplexMatrix complex_subfield(const QMatrix& a);

// det of the complex representation (the Study determinant).
ComplexRational study_determinant(const QMatrix& a);

// True iff the Study determinant is real, nonnegative and equal to ddet A.
bool study_check(const QMatrix& a);

} // namespace qdet::oracle
