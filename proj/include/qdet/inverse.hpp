#pragma once

#include "qdet/ncdet.hpp"

namespace qdet {

enum class CofactorKind { Right, Left, DoubleRight, DoubleLeft };

// n x n cofactor values laid out for the inverse: entry (i,j) holds the
// (j,i) cofactor, so that inverse = table / determinant.
struct CofactorTable {
  CofactorKind kind;
  QMatrix values;
};

// cdet_j of A*A with column j replaced by column i of A*.
Quaternion double_left_cofactor(const QMatrix& a, std::size_t i, std::size_t j,
                                const EvalOptions& opts = {});

// rdet_i of AA* with row i replaced by row j of A*.
Quaternion double_right_cofactor(const QMatrix& a, std::size_t i, std::size_t j,
                                 const EvalOptions& opts = {});

// Adj[[A]] built from double-left (default) or double-right cofactors.
// Defined for singular A as well.
CofactorTable adjugate(const QMatrix& a, CofactorKind kind = CofactorKind::DoubleLeft,
                       const EvalOptions& opts = {});

// (A*A)^-1 A* and A* (AA*)^-1 in determinantal form. Both throw
// Error(SingularMatrix) when ddet A = 0.
QMatrix left_inverse(const QMatrix& a, const EvalOptions& opts = {});
QMatrix right_inverse(const QMatrix& a, const EvalOptions& opts = {});

// Inverse of a Hermitian matrix from its right cofactors (or left cofactors
// with CofactorKind::Left). Throws Error(NotHermitian) or Error(SingularMatrix).
QMatrix hermitian_inverse(const QMatrix& h, CofactorKind kind = CofactorKind::Right,
                          const EvalOptions& opts = {});

} // namespace qdet
