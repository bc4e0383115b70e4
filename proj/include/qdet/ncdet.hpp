#pragma once

#include "qdet/qmatrix.hpp"

#include <cstddef>

namespace qdet {

struct EvalOptions {
  // Largest n accepted by the permutation-sum evaluators (n! monomials).
  std::size_t max_n = 9;
  // Worker threads for the permutation sum; 0 means hardware concurrency.
  // The result does not depend on this value.
  unsigned workers = 0;
  // Evaluate redundant routes and throw Error(VerificationFailed) on
  // disagreement (all 2n Hermitian determinants, A*A against AA*).
  bool verify = false;
};

// i-th row determinant: sum over S_n of (-1)^(n-r) times the product of
// entries taken along the left-ordered cycle notation anchored at i.
Quaternion rdet(const QMatrix& a, std::size_t i, const EvalOptions& opts = {});

// j-th column determinant: the mirror sum over right-ordered cycle
// notation anchored at j.
Quaternion cdet(const QMatrix& a, std::size_t j, const EvalOptions& opts = {});

// Right cofactor R_ij with rdet_i A = sum_j a_ij R_ij. For i != j this is
// -rdet_j of A with column j replaced by column i and then row i and
// column i deleted; for i == j it is rdet of A^{ii} anchored at the smallest
// remaining index. 1 for n = 1.
Quaternion right_cofactor(const QMatrix& a, std::size_t i, std::size_t j,
                          const EvalOptions& opts = {});

// Left cofactor L_ij with cdet_j A = sum_i L_ij a_ij.
Quaternion left_cofactor(const QMatrix& a, std::size_t i, std::size_t j,
                         const EvalOptions& opts = {});

// Common real value of all row and column determinants of a Hermitian
// matrix. Throws Error(NotHermitian).
Rational det_hermitian(const QMatrix& h, const EvalOptions& opts = {});

// det(A*A), which equals det(AA*).
Rational ddet(const QMatrix& a, const EvalOptions& opts = {});

// Largest order of a nonzero principal minor of a Hermitian matrix.
std::size_t rank_by_principal_minors(const QMatrix& h, const EvalOptions& opts = {});

} // namespace qdet
