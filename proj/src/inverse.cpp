#include "qdet/inverse.hpp"

#include "qdet/error.hpp"

#include <stdexcept>
#include <string>

namespace qdet {

namespace {

void require_square(const QMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " needs a square matrix");
  }
}

// Double cofactors of one matrix share its Gram products.
struct GramPair {
  QMatrix adj;
  QMatrix left;  // A*A
  QMatrix right; // AA*

  explicit GramPair(const QMatrix& a) : adj(adjoint(a)), left(adj * a), right(a * adj) {}

  Quaternion double_left(std::size_t i, std::size_t j, const EvalOptions& opts) const {
    return cdet(replace_column(left, j, adj.column(i)), j, opts);
  }
  Quaternion double_right(std::size_t i, std::size_t j, const EvalOptions& opts) const {
    return rdet(replace_row(right, i, adj.row(j)), i, opts);
  }
};

QMatrix transposed_table(const QMatrix& a, CofactorKind kind, const EvalOptions& opts) {
  const std::size_t n = a.rows();
  QMatrix table(n, n);
  if (kind == CofactorKind::DoubleLeft || kind == CofactorKind::DoubleRight) {
    const GramPair gram(a);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        table(j, i) = kind == CofactorKind::DoubleLeft ? gram.double_left(i, j, opts)
                                                       : gram.double_right(i, j, opts);
      }
    }
    return table;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      table(j, i) =
          kind == CofactorKind::Left ? left_cofactor(a, i, j, opts) : right_cofactor(a, i, j, opts);
    }
  }
  return table;
}

Rational nonzero_ddet(const QMatrix& a, const EvalOptions& opts) {
  require_square(a, "inverse");
  Rational d = ddet(a, opts);
  if (d.is_zero()) {
    throw Error(ErrorCode::SingularMatrix, "matrix is singular (ddet = 0)");
  }
  return d;
}

} // namespace

Quaternion double_left_cofactor(const QMatrix& a, std::size_t i, std::size_t j,
                                const EvalOptions& opts) {
  require_square(a, "double_left_cofactor");
  (void)a.at(i, j);
  return GramPair(a).double_left(i, j, opts);
}

Quaternion double_right_cofactor(const QMatrix& a, std::size_t i, std::size_t j,
                                 const EvalOptions& opts) {
  require_square(a, "double_right_cofactor");
  (void)a.at(i, j);
  return GramPair(a).double_right(i, j, opts);
}

CofactorTable adjugate(const QMatrix& a, CofactorKind kind, const EvalOptions& opts) {
  require_square(a, "adjugate");
  return {kind, transposed_table(a, kind, opts)};
}

QMatrix left_inverse(const QMatrix& a, const EvalOptions& opts) {
  const Rational d = nonzero_ddet(a, opts);
  return transposed_table(a, CofactorKind::DoubleLeft, opts).scale(Rational(1) / d);
}

QMatrix right_inverse(const QMatrix& a, const EvalOptions& opts) {
  const Rational d = nonzero_ddet(a, opts);
  return transposed_table(a, CofactorKind::DoubleRight, opts).scale(Rational(1) / d);
}

QMatrix hermitian_inverse(const QMatrix& h, CofactorKind kind, const EvalOptions& opts) {
  if (kind != CofactorKind::Right && kind != CofactorKind::Left) {
    throw std::invalid_argument("hermitian_inverse uses right or left cofactors");
  }
  const Rational d = det_hermitian(h, opts);
  if (d.is_zero()) {
    throw Error(ErrorCode::SingularMatrix, "Hermitian matrix is singular (det = 0)");
  }
  return transposed_table(h, kind, opts).scale(Rational(1) / d);
}

} // namespace qdet
