#include "qdet/solvers.hpp"

#include "qdet/error.hpp"

#include <string>

namespace qdet {

std::string_view to_string(SolveMethod method) noexcept {
  switch (method) {
  case SolveMethod::RightSystem:
    return "right-system";
  case SolveMethod::LeftSystem:
    return "left-system";
  case SolveMethod::RightEquation:
    return "right-equation";
  case SolveMethod::LeftEquation:
    return "left-equation";
  case SolveMethod::TwoSidedRow:
    return "two-sided-row";
  case SolveMethod::TwoSidedColumn:
    return "two-sided-column";
  case SolveMethod::TwoSidedBoth:
    return "two-sided-both";
  }
  return "unknown";
}

namespace {

void require_square(const QMatrix& m, const char* name) {
  if (!m.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, std::string(name) + " must be square, got " +
                                              std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()));
  }
}

void require_shape(const QMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::ShapeMismatch, std::string(name) + " must be " + std::to_string(rows) +
                                              "x" + std::to_string(cols));
  }
}

Rational nonsingular_ddet(const QMatrix& m, const char* name, const EvalOptions& opts) {
  Rational d = ddet(m, opts);
  if (d.is_zero()) {
    throw Error(ErrorCode::SingularMatrix,
                std::string(name) + " is singular (ddet " + name + " = 0)");
  }
  return d;
}

void certify(SolveReport& report, const QMatrix& lhs, const QMatrix& rhs) {
  if (lhs != rhs) {
    throw Error(ErrorCode::VerificationFailed, "solution does not satisfy the equation exactly");
  }
  report.residual_zero = true;
}

// Row i of the result: cdet_i (A*A).i(column m of rhs) for m = 1..cols.
QMatrix column_rule(const QMatrix& gram, const QMatrix& rhs, const EvalOptions& opts) {
  QMatrix out(gram.rows(), rhs.cols());
  for (std::size_t i = 1; i <= gram.rows(); ++i) {
    for (std::size_t m = 1; m <= rhs.cols(); ++m) {
      out(i, m) = cdet(replace_column(gram, i, rhs.column(m)), i, opts);
    }
  }
  return out;
}

// Column j of the result: rdet_j (BB*)j.(row k of rhs) for k = 1..rows.
QMatrix row_rule(const QMatrix& gram, const QMatrix& rhs, const EvalOptions& opts) {
  QMatrix out(rhs.rows(), gram.rows());
  for (std::size_t k = 1; k <= rhs.rows(); ++k) {
    for (std::size_t j = 1; j <= gram.rows(); ++j) {
      out(k, j) = rdet(replace_row(gram, j, rhs.row(k)), j, opts);
    }
  }
  return out;
}

} // namespace

SolveReport solve_right_system(const QMatrix& a, const QVector& y, const EvalOptions& opts) {
  require_square(a, "A");
  if (y.orientation() != Orientation::Column || y.size() != a.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                "right-hand side must be a column of length " + std::to_string(a.rows()));
  }
  const Rational d = nonsingular_ddet(a, "A", opts);
  const QMatrix adj = adjoint(a);
  const QMatrix f = adj * QMatrix::from_column(y);
  SolveReport report{column_rule(adj * a, f, opts).scale(Rational(1) / d), d, std::nullopt, false,
                     SolveMethod::RightSystem};
  certify(report, a * report.solution, QMatrix::from_column(y));
  return report;
}

SolveReport solve_left_system(const QMatrix& a, const QVector& y, const EvalOptions& opts) {
  require_square(a, "A");
  if (y.orientation() != Orientation::Row || y.size() != a.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                "right-hand side must be a row of length " + std::to_string(a.rows()));
  }
  const Rational d = nonsingular_ddet(a, "A", opts);
  const QMatrix adj = adjoint(a);
  const QMatrix z = QMatrix::from_row(y) * adj;
  SolveReport report{row_rule(a * adj, z, opts).scale(Rational(1) / d), d, std::nullopt, false,
                     SolveMethod::LeftSystem};
  certify(report, report.solution * a, QMatrix::from_row(y));
  return report;
}

SolveReport solve_ax_b(const QMatrix& a, const QMatrix& b, const EvalOptions& opts) {
  require_square(a, "A");
  require_shape(b, a.rows(), a.rows(), "B");
  const Rational d = nonsingular_ddet(a, "A", opts);
  const QMatrix adj = adjoint(a);
  SolveReport report{column_rule(adj * a, adj * b, opts).scale(Rational(1) / d), d, std::nullopt,
                     false, SolveMethod::RightEquation};
  certify(report, a * report.solution, b);
  return report;
}

SolveReport solve_xa_b(const QMatrix& a, const QMatrix& b, const EvalOptions& opts) {
  require_square(a, "A");
  require_shape(b, a.rows(), a.rows(), "B");
  const Rational d = nonsingular_ddet(a, "A", opts);
  const QMatrix adj = adjoint(a);
  SolveReport report{row_rule(a * adj, b * adj, opts).scale(Rational(1) / d), d, std::nullopt,
                     false, SolveMethod::LeftEquation};
  certify(report, report.solution * a, b);
  return report;
}

TwoSidedTerms two_sided_terms(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                              const EvalOptions& opts) {
  require_square(a, "A");
  require_shape(b, a.rows(), a.rows(), "B");
  require_shape(c, a.rows(), a.rows(), "C");
  const QMatrix adj_a = adjoint(a);
  const QMatrix adj_b = adjoint(b);
  QMatrix c_tilde = adj_a * c * adj_b;
  QMatrix rows = column_rule(adj_a * a, c_tilde, opts);
  QMatrix cols = row_rule(b * adj_b, c_tilde, opts);
  return {std::move(c_tilde), std::move(rows), std::move(cols)};
}

SolveReport solve_axb_c(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                        TwoSidedFormula formula, const EvalOptions& opts) {
  require_square(a, "A");
  require_shape(b, a.rows(), a.rows(), "B");
  require_shape(c, a.rows(), a.rows(), "C");
  if (opts.verify) {
    formula = TwoSidedFormula::Both;
  }
  const Rational da = nonsingular_ddet(a, "A", opts);
  const Rational db = nonsingular_ddet(b, "B", opts);
  const Rational scale = Rational(1) / (da * db);

  const QMatrix adj_a = adjoint(a);
  const QMatrix adj_b = adjoint(b);
  const QMatrix gram_a = adj_a * a;
  const QMatrix gram_b = b * adj_b;
  const QMatrix c_tilde = adj_a * c * adj_b;

  std::optional<QMatrix> by_rows;
  std::optional<QMatrix> by_columns;
  if (formula != TwoSidedFormula::Column) {
    // x_ij = rdet_j (BB*)j.(c^A_i.) / (ddet A ddet B)
    by_rows = row_rule(gram_b, column_rule(gram_a, c_tilde, opts), opts).scale(scale);
  }
  if (formula != TwoSidedFormula::Row) {
    // x_ij = cdet_i (A*A).i(c^B_.j) / (ddet A ddet B)
    by_columns = column_rule(gram_a, row_rule(gram_b, c_tilde, opts), opts).scale(scale);
  }
  if (by_rows && by_columns && *by_rows != *by_columns) {
    throw Error(ErrorCode::VerificationFailed, "row and column Cramer formulas disagree");
  }

  const SolveMethod method = formula == TwoSidedFormula::Row      ? SolveMethod::TwoSidedRow
                             : formula == TwoSidedFormula::Column ? SolveMethod::TwoSidedColumn
                                                                  : SolveMethod::TwoSidedBoth;
  SolveReport report{by_rows ? std::move(*by_rows) : std::move(*by_columns), da, db, false, method};
  certify(report, a * report.solution * b, c);
  return report;
}

} // namespace qdet
