#include "qdet/oracle.hpp"

#include "qdet/error.hpp"
#include "qdet/ncdet.hpp"

#include <utility>

namespace qdet::oracle {

ComplexRational operator/(const ComplexRational& x, const ComplexRational& y) {
  const Rational norm = y.re * y.re + y.im * y.im;
  if (norm.is_zero()) {
    throw Error(ErrorCode::ZeroDivisor, "complex division by zero");
  }
  return {(x.re * y.re + x.im * y.im) / norm, (x.im * y.re - x.re * y.im) / norm};
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "complex matrix product shape mismatch");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= b.cols(); ++j) {
      ComplexRational sum;
      for (std::size_t k = 1; k <= a.cols(); ++k) {
        sum = sum + a(i, k) * b(k, j);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

ComplexRational classical_det(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  ComplexMatrix w = m;
  ComplexRational previous_pivot(1);
  bool negate = false;
  for (std::size_t k = 1; k <= n; ++k) {
    if (w(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row <= n && w(swap_row, k).is_zero()) {
        ++swap_row;
      }
      if (swap_row > n) {
        return {};
      }
      for (std::size_t c = 1; c <= n; ++c) {
        std::swap(w(k, c), w(swap_row, c));
      }
      negate = !negate;
    }
    for (std::size_t i = k + 1; i <= n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / previous_pivot;
      }
      w(i, k) = ComplexRational();
    }
    previous_pivot = w(k, k);
  }
  return negate ? -w(n, n) : w(n, n);
}

ComplexMatrix complex_representation(const QMatrix& a) {
  ComplexMatrix out(2 * a.rows(), 2 * a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      const auto& c = a(i, j).coeffs();
      const std::size_t r = 2 * i - 1;
      const std::size_t s = 2 * j - 1;
      out(r, s) = {c[0], c[1]};
      out(r, s + 1) = {c[2], c[3]};
      out(r + 1, s) = {-c[2], c[3]};
      out(r + 1, s + 1) = {c[0], -c[1]};
    }
  }
  return out;
}

ComplexMatrix complex_subfield(const QMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      const auto& c = a(i, j).coeffs();
      if (!c[2].is_zero() || !c[3].is_zero()) {
        throw Error(ErrorCode::ShapeMismatch, "entry outside the complex subfield");
      }
      out(i, j) = {c[0], c[1]};
    }
  }
  return out;
}

ComplexRational study_determinant(const QMatrix& a) {
  return classical_det(complex_representation(a));
}

bool study_check(const QMatrix& a) {
  const ComplexRational s = study_determinant(a);
  return s.im.is_zero() && s.re.sign() >= 0 && s.re == ddet(a);
}

} // namespace qdet::oracle
