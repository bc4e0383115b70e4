#include "qdet/qmatrix.hpp"

#include "qdet/error.hpp"

#include <string>
#include <utility>

namespace qdet {

namespace {

std::string shape(const QMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const QMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorCode::ShapeMismatch,
                std::string(what) + " needs a square matrix, got " + shape(a));
  }
}

} // namespace

QVector::QVector(std::vector<Quaternion> entries, Orientation orientation)
    : entries_(std::move(entries)), orientation_(orientation) {
  if (entries_.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "vector must have at least one entry");
  }
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  }
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(rows * cols) +
                                              " entries, got " + std::to_string(entries_.size()));
  }
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    m(i, i) = Quaternion(1);
  }
  return m;
}

QMatrix QMatrix::from_column(const QVector& v) {
  return {v.size(), 1, std::vector<Quaternion>(v.entries().begin(), v.entries().end())};
}

QMatrix QMatrix::from_row(const QVector& v) {
  return {1, v.size(), std::vector<Quaternion>(v.entries().begin(), v.entries().end())};
}

const Quaternion& QMatrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "index (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") outside " + shape(*this));
  }
  return (*this)(i, j);
}

QVector QMatrix::row(std::size_t i) const {
  if (i < 1 || i > rows_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "row " + std::to_string(i) + " outside " + shape(*this));
  }
  std::vector<Quaternion> v(entries_.begin() + static_cast<std::ptrdiff_t>((i - 1) * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  return {std::move(v), Orientation::Row};
}

QVector QMatrix::column(std::size_t j) const {
  if (j < 1 || j > cols_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "column " + std::to_string(j) + " outside " + shape(*this));
  }
  std::vector<Quaternion> v;
  v.reserve(rows_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    v.push_back((*this)(i, j));
  }
  return {std::move(v), Orientation::Column};
}

QMatrix& QMatrix::scale(const Rational& s) {
  for (auto& e : entries_) {
    e.scale(s);
  }
  return *this;
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix out(a.cols(), a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      out(j, i) = a(i, j).conj();
    }
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
  }
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= b.cols(); ++j) {
      Quaternion sum;
      for (std::size_t k = 1; k <= a.cols(); ++k) {
        sum += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(sum);
    }
  }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot add " + shape(a) + " and " + shape(b));
  }
  QMatrix out = a;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      out(i, j) += b(i, j);
    }
  }
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot subtract " + shape(b) + " from " + shape(a));
  }
  QMatrix out = a;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      out(i, j) -= b(i, j);
    }
  }
  return out;
}

bool is_hermitian(const QMatrix& a) {
  require_square(a, "is_hermitian");
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = i; j <= a.cols(); ++j) {
      if (a(i, j) != a(j, i).conj()) {
        return false;
      }
    }
  }
  return true;
}

QMatrix replace_column(const QMatrix& a, std::size_t j, const QVector& b) {
  if (j < 1 || j > a.cols()) {
    throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(j) + " outside " + shape(a));
  }
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "replacement column has length " +
                                              std::to_string(b.size()) + ", matrix is " + shape(a));
  }
  QMatrix out = a;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    out(i, j) = b(i);
  }
  return out;
}

QMatrix replace_row(const QMatrix& a, std::size_t i, const QVector& b) {
  if (i < 1 || i > a.rows()) {
    throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i) + " outside " + shape(a));
  }
  if (b.size() != a.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "replacement row has length " + std::to_string(b.size()) +
                                              ", matrix is " + shape(a));
  }
  QMatrix out = a;
  for (std::size_t j = 1; j <= a.cols(); ++j) {
    out(i, j) = b(j);
  }
  return out;
}

QMatrix delete_row_col(const QMatrix& a, std::size_t i, std::size_t j) {
  require_square(a, "delete_row_col");
  const std::size_t n = a.rows();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape(a));
  }
  if (n == 1) {
    throw Error(ErrorCode::DegenerateSize, "cannot delete a row and column of a 1x1 matrix");
  }
  std::vector<Quaternion> entries;
  entries.reserve((n - 1) * (n - 1));
  for (std::size_t r = 1; r <= n; ++r) {
    if (r == i) {
      continue;
    }
    for (std::size_t c = 1; c <= n; ++c) {
      if (c != j) {
        entries.push_back(a(r, c));
      }
    }
  }
  return {n - 1, n - 1, std::move(entries)};
}

QMatrix principal_submatrix(const QMatrix& a, std::span<const std::size_t> indices) {
  require_square(a, "principal_submatrix");
  const std::size_t m = indices.size();
  QMatrix out(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      out(r + 1, c + 1) = a.at(indices[r], indices[c]);
    }
  }
  return out;
}

} // namespace qdet
