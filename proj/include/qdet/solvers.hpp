#pragma once

#include "qdet/ncdet.hpp"

#include <optional>
#include <string_view>

namespace qdet {

enum class SolveMethod {
  RightSystem,    // A x = y
  LeftSystem,     // x A = y
  RightEquation,  // A X = B
  LeftEquation,   // X A = B
  TwoSidedRow,    // A X B = C through the row vectors c^A
  TwoSidedColumn, // A X B = C through the column vectors c^B
  TwoSidedBoth,   // both of the above, checked entrywise equal
};

std::string_view to_string(SolveMethod method) noexcept;

enum class TwoSidedFormula { Row, Column, Both };

struct SolveReport {
  // n x 1 for A x = y, 1 x n for x A = y, n x n otherwise.
  QMatrix solution;
  Rational ddet_a;
  std::optional<Rational> ddet_b;
  // Set after substituting the solution back into the equation exactly.
  bool residual_zero = false;
  SolveMethod method;
};

// x_j = cdet_j (A*A).j(A* y) / ddet A. `y` must be a column.
SolveReport solve_right_system(const QMatrix& a, const QVector& y, const EvalOptions& opts = {});

// x_i = rdet_i (AA*)i.(y A*) / ddet A. `y` must be a row.
SolveReport solve_left_system(const QMatrix& a, const QVector& y, const EvalOptions& opts = {});

// x_ij = cdet_i (A*A).i(column j of A*B) / ddet A.
SolveReport solve_ax_b(const QMatrix& a, const QMatrix& b, const EvalOptions& opts = {});

// x_ij = rdet_j (AA*)j.(row i of BA*) / ddet A.
SolveReport solve_xa_b(const QMatrix& a, const QMatrix& b, const EvalOptions& opts = {});

// Cramer's rule for A X B = C. With opts.verify the column route is
// evaluated as well, as if `formula` were Both.
SolveReport solve_axb_c(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                        TwoSidedFormula formula = TwoSidedFormula::Row,
                        const EvalOptions& opts = {});

// Intermediates of the two-sided rule.
struct TwoSidedTerms {
  QMatrix c_tilde;      // A* C B*
  QMatrix row_terms;    // row i: cdet_i (A*A).i(column m of c_tilde), m = 1..n
  QMatrix column_terms; // column j: rdet_j (BB*)j.(row k of c_tilde), k = 1..n
};

TwoSidedTerms two_sided_terms(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                              const EvalOptions& opts = {});

} // namespace qdet
