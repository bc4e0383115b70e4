#include "qdet/cli.hpp"

#include "qdet/inverse.hpp"
#include "qdet/matrix_io.hpp"
#include "qdet/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace qdet::cli {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::ParseError:
    return 2;
  case ErrorCode::ShapeMismatch:
    return 3;
  case ErrorCode::SingularMatrix:
    return 4;
  case ErrorCode::NotHermitian:
    return 5;
  case ErrorCode::SizeCapExceeded:
    return 6;
  case ErrorCode::IndexOutOfRange:
    return kExitUsage;
  default:
    return kExitFailure;
  }
}

namespace {

using nlohmann::json;

struct Settings {
  std::string output = "text";
  std::size_t max_n = EvalOptions{}.max_n;
  unsigned workers = 0;
  bool verify = false;
  bool floating = false;
  double tol = 1e-9;

  EvalOptions eval() const { return {max_n, workers, verify}; }
};

// Approximate arithmetic used only for --float display and residuals.
using DoubleQuat = std::array<double, 4>;

DoubleQuat to_double(const Quaternion& q) {
  return {q.coeff(0).to_double(), q.coeff(1).to_double(), q.coeff(2).to_double(),
          q.coeff(3).to_double()};
}

DoubleQuat mul(const DoubleQuat& a, const DoubleQuat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

struct DoubleMatrix {
  std::size_t rows;
  std::size_t cols;
  std::vector<DoubleQuat> e;

  DoubleQuat& at(std::size_t i, std::size_t j) { return e[(i - 1) * cols + j - 1]; }
  const DoubleQuat& at(std::size_t i, std::size_t j) const { return e[(i - 1) * cols + j - 1]; }
};

DoubleMatrix to_double(const QMatrix& m) {
  DoubleMatrix out{m.rows(), m.cols(), {}};
  for (const auto& q : m.data()) {
    out.e.push_back(to_double(q));
  }
  return out;
}

DoubleMatrix mul(const DoubleMatrix& a, const DoubleMatrix& b) {
  DoubleMatrix out{a.rows, b.cols, std::vector<DoubleQuat>(a.rows * b.cols, DoubleQuat{})};
  for (std::size_t i = 1; i <= a.rows; ++i) {
    for (std::size_t j = 1; j <= b.cols; ++j) {
      for (std::size_t k = 1; k <= a.cols; ++k) {
        const DoubleQuat p = mul(a.at(i, k), b.at(k, j));
        for (std::size_t u = 0; u < 4; ++u) {
          out.at(i, j)[u] += p[u];
        }
      }
    }
  }
  return out;
}

double max_abs_difference(const DoubleMatrix& a, const DoubleMatrix& b) {
  double worst = 0.0;
  for (std::size_t e = 0; e < a.e.size(); ++e) {
    for (std::size_t u = 0; u < 4; ++u) {
      worst = std::max(worst, std::abs(a.e[e][u] - b.e[e][u]));
    }
  }
  return worst;
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string format_float_quaternion(const Quaternion& q) {
  static constexpr std::array<const char*, 4> units = {"", "i", "j", "k"};
  const DoubleQuat d = to_double(q);
  std::string out;
  for (std::size_t u = 0; u < 4; ++u) {
    if (d[u] == 0.0) {
      continue;
    }
    if (d[u] > 0 && !out.empty()) {
      out += '+';
    }
    out += format_double(d[u]);
    out += units[u];
  }
  return out.empty() ? "0" : out;
}

// ---- rendering ------------------------------------------------------------

class Renderer {
public:
  explicit Renderer(const Settings& s) : s_(s) {}

  std::string quaternion_text(const Quaternion& q) const {
    return s_.floating ? format_float_quaternion(q) : format_quaternion(q);
  }

  std::string rational_text(const Rational& r) const {
    return s_.floating ? format_double(r.to_double()) : r.to_string();
  }

  std::string matrix_text(const QMatrix& m) const {
    if (!s_.floating) {
      return format_matrix(m);
    }
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 1; i <= m.rows(); ++i) {
      for (std::size_t j = 1; j <= m.cols(); ++j) {
        out += (j > 1 ? " " : "") + format_float_quaternion(m(i, j));
      }
      out += '\n';
    }
    return out;
  }

  json quaternion_json(const Quaternion& q) const {
    json out = json::array();
    for (const auto& c : q.coeffs()) {
      if (s_.floating) {
        out.push_back(c.to_double());
      } else {
        out.push_back(c.to_string());
      }
    }
    return out;
  }

  json rational_json(const Rational& r) const {
    return s_.floating ? json(r.to_double()) : json(r.to_string());
  }

  json matrix_json(const QMatrix& m) const {
    json rows = json::array();
    for (std::size_t i = 1; i <= m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 1; j <= m.cols(); ++j) {
        row.push_back(quaternion_json(m(i, j)));
      }
      rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
  }

  std::string render(const CommandResult& r) const {
    return s_.output == "json" ? render_json(r).dump(2) + "\n" : render_text(r);
  }

private:
  std::string render_text(const CommandResult& r) const {
    std::string out;
    if (r.status == Status::Error) {
      return out;
    }
    if (const auto* d = std::get_if<DetPayload>(&r.payload)) {
      out = (d->value.is_real() ? rational_text(d->value.re()) : quaternion_text(d->value)) + "\n";
    } else if (const auto* k = std::get_if<RankPayload>(&r.payload)) {
      out = std::to_string(k->rank) + "\n";
    } else if (const auto* m = std::get_if<QMatrix>(&r.payload)) {
      out = matrix_text(*m);
    } else if (const auto* s = std::get_if<SolveReport>(&r.payload)) {
      out += "method: " + std::string(to_string(s->method)) + "\n";
      out += "ddet A: " + rational_text(s->ddet_a) + "\n";
      if (s->ddet_b) {
        out += "ddet B: " + rational_text(*s->ddet_b) + "\n";
      }
      out += "solution:\n" + matrix_text(s->solution);
      out += std::string("residual: ") + (s->residual_zero ? "exact" : "nonzero") + "\n";
    }
    for (const auto& d : r.diagnostics) {
      out += "# " + d + "\n";
    }
    return out;
  }

  json render_json(const CommandResult& r) const {
    json out;
    out["command"] = r.command;
    if (r.status == Status::Error) {
      out["status"] = "error";
      out["error"] = {{"code", r.error ? std::string(to_string(*r.error)) : "UsageError"},
                      {"message", r.message}};
      out["exit_code"] = r.exit_code;
      return out;
    }
    out["status"] = "ok";
    if (const auto* d = std::get_if<DetPayload>(&r.payload)) {
      out["kind"] = d->kind;
      if (d->index) {
        out["index"] = *d->index;
      }
      out["value"] = quaternion_json(d->value);
    } else if (const auto* k = std::get_if<RankPayload>(&r.payload)) {
      out["rank"] = k->rank;
    } else if (const auto* m = std::get_if<QMatrix>(&r.payload)) {
      out["matrix"] = matrix_json(*m);
    } else if (const auto* s = std::get_if<SolveReport>(&r.payload)) {
      json rep = {{"method", std::string(to_string(s->method))},
                  {"ddet_a", rational_json(s->ddet_a)},
                  {"solution", matrix_json(s->solution)},
                  {"residual_zero", s->residual_zero}};
      if (s->ddet_b) {
        rep["ddet_b"] = rational_json(*s->ddet_b);
      }
      out["report"] = std::move(rep);
    }
    out["diagnostics"] = r.diagnostics;
    return out;
  }

  const Settings& s_;
};

// ---- commands -------------------------------------------------------------

void study_diagnostic(const QMatrix& m, const char* name, CommandResult& result) {
  const oracle::ComplexRational s = oracle::study_determinant(m);
  if (!s.im.is_zero() || s.re != ddet(m)) {
    throw Error(ErrorCode::VerificationFailed,
                std::string("Study determinant of ") + name + " disagrees with ddet");
  }
  result.diagnostics.push_back(std::string("verified: Study determinant of ") + name +
                               " equals ddet " + name + " = " + s.re.to_string());
}

void run_det(const std::string& kind, std::size_t index, const std::string& path, const Settings& s,
             CommandResult& result) {
  const QMatrix a = parse_matrix_file(path);
  const EvalOptions opts = s.eval();
  DetPayload p{kind, std::nullopt, {}};
  if (kind == "rdet") {
    p.index = index;
    p.value = rdet(a, index, opts);
  } else if (kind == "cdet") {
    p.index = index;
    p.value = cdet(a, index, opts);
  } else if (kind == "det") {
    p.value = det_hermitian(a, opts);
    if (s.verify) {
      result.diagnostics.push_back("verified: all row and column determinants agree and are real");
    }
  } else {
    p.value = ddet(a, opts);
    if (s.verify) {
      result.diagnostics.push_back("verified: det(A*A) = det(AA*)");
      study_diagnostic(a, "A", result);
    }
  }
  result.payload = std::move(p);
}

void run_inverse(const std::string& side, const std::string& path, const Settings& s,
                 CommandResult& result) {
  const QMatrix a = parse_matrix_file(path);
  const EvalOptions opts = s.eval();
  QMatrix inv = side == "hermitian" ? hermitian_inverse(a, CofactorKind::Right, opts)
                : side == "right"   ? right_inverse(a, opts)
                                    : left_inverse(a, opts);
  if (s.verify) {
    const QMatrix other = side == "hermitian" ? hermitian_inverse(a, CofactorKind::Left, opts)
                          : side == "right"   ? left_inverse(a, opts)
                                              : right_inverse(a, opts);
    const QMatrix id = QMatrix::identity(a.rows());
    if (other != inv || a * inv != id || inv * a != id) {
      throw Error(ErrorCode::VerificationFailed, "inverse representations disagree");
    }
    result.diagnostics.push_back(
        "verified: left and right representations agree; A A^-1 = A^-1 A = I");
  }
  result.payload = std::move(inv);
}

void run_adjugate(const std::string& cofactors, const std::string& path, const Settings& s,
                  CommandResult& result) {
  const QMatrix a = parse_matrix_file(path);
  const CofactorKind kind =
      cofactors == "right" ? CofactorKind::DoubleRight : CofactorKind::DoubleLeft;
  result.payload = adjugate(a, kind, s.eval()).values;
}

QVector as_vector(const QMatrix& m, Orientation want) {
  if (want == Orientation::Column && m.cols() == 1) {
    return m.column(1);
  }
  if (want == Orientation::Row && m.rows() == 1) {
    return m.row(1);
  }
  throw Error(ErrorCode::ShapeMismatch, want == Orientation::Column
                                            ? "right-hand side must be an n x 1 matrix"
                                            : "right-hand side must be a 1 x n matrix");
}

struct SolveArgs {
  std::string form;
  std::string a;
  std::string b;
  std::string c;
  std::string y;
  std::string formula = "row";
};

QMatrix require_file(const std::string& path, const char* flag) {
  if (path.empty()) {
    throw CLI::ValidationError(std::string(flag) + " is required for this form");
  }
  return parse_matrix_file(path);
}

void run_solve(const SolveArgs& args, const Settings& s, CommandResult& result) {
  const EvalOptions opts = s.eval();
  const QMatrix a = require_file(args.a, "--a");
  SolveReport report{QMatrix(1, 1), 0, std::nullopt, false, SolveMethod::RightSystem};
  // Matrices the float-mode residual is checked against: lhs * X * rhs = target.
  std::optional<QMatrix> left_factor;
  std::optional<QMatrix> right_factor;
  QMatrix target(1, 1);

  if (args.form == "ax=y") {
    target = require_file(args.y.empty() ? args.b : args.y, "--y");
    report = solve_right_system(a, as_vector(target, Orientation::Column), opts);
    left_factor = a;
  } else if (args.form == "xa=y") {
    target = require_file(args.y.empty() ? args.b : args.y, "--y");
    report = solve_left_system(a, as_vector(target, Orientation::Row), opts);
    right_factor = a;
  } else if (args.form == "ax=b") {
    target = require_file(args.b, "--b");
    report = solve_ax_b(a, target, opts);
    left_factor = a;
  } else if (args.form == "xa=b") {
    target = require_file(args.b, "--b");
    report = solve_xa_b(a, target, opts);
    right_factor = a;
  } else {
    const QMatrix b = require_file(args.b, "--b");
    target = require_file(args.c, "--c");
    const TwoSidedFormula formula = args.formula == "column" ? TwoSidedFormula::Column
                                    : args.formula == "both" ? TwoSidedFormula::Both
                                                             : TwoSidedFormula::Row;
    report = solve_axb_c(a, b, target, formula, opts);
    left_factor = a;
    right_factor = b;
    if (report.method == SolveMethod::TwoSidedBoth) {
      result.diagnostics.push_back("verified: row and column Cramer formulas agree");
    }
    if (s.verify) {
      study_diagnostic(b, "B", result);
    }
  }
  if (s.verify) {
    study_diagnostic(a, "A", result);
  }

  if (s.floating) {
    DoubleMatrix lhs = to_double(report.solution);
    if (left_factor) {
      lhs = mul(to_double(*left_factor), lhs);
    }
    if (right_factor) {
      lhs = mul(lhs, to_double(*right_factor));
    }
    const double residual = max_abs_difference(lhs, to_double(target));
    if (!(residual <= s.tol)) {
      throw Error(ErrorCode::VerificationFailed, "floating-point residual " +
                                                     format_double(residual) +
                                                     " exceeds tolerance " + format_double(s.tol));
    }
    result.diagnostics.push_back("float residual " + format_double(residual) +
                                 " within tolerance " + format_double(s.tol));
  }
  result.payload = std::move(report);
}

void add_common_flags(CLI::App& app, Settings& s) {
  app.add_option("--output", s.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-n", s.max_n, "Largest matrix order for determinant evaluation")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", s.workers, "Worker threads (0 = hardware concurrency)");
  app.add_flag("--verify", s.verify, "Run every available cross-check");
  app.add_flag("--float", s.floating, "Print approximate decimal values");
  app.add_option("--tol", s.tol, "Residual tolerance in --float mode")
      ->check(CLI::NonNegativeNumber);
}

} // namespace

CommandResult run_command(std::span<const std::string> args) {
  CommandResult result;
  Settings settings;

  CLI::App app{"Exact quaternion determinants, inverses and Cramer's rule", "qdet"};
  app.require_subcommand(1);
  app.fallthrough();
  add_common_flags(app, settings);

  std::string det_kind;
  std::size_t det_index = 1;
  std::string det_file;
  auto* det = app.add_subcommand("det", "Row, column, Hermitian or double determinant");
  det->add_option("--kind", det_kind, "rdet, cdet, det (Hermitian) or ddet")
      ->required()
      ->check(CLI::IsMember({"rdet", "cdet", "det", "ddet"}));
  det->add_option("--index", det_index, "Anchor index for rdet/cdet (1-based)");
  det->add_option("file", det_file, "Matrix file")->required()->check(CLI::ExistingFile);

  std::string rank_file;
  auto* rank = app.add_subcommand("rank", "Rank by principal minors of a Hermitian matrix");
  rank->add_option("file", rank_file, "Matrix file")->required()->check(CLI::ExistingFile);

  std::string inverse_side = "left";
  std::string inverse_file;
  auto* inverse = app.add_subcommand("inverse", "Determinantal inverse");
  inverse->add_option("--side", inverse_side, "left, right or hermitian")
      ->check(CLI::IsMember({"left", "right", "hermitian"}));
  inverse->add_option("file", inverse_file, "Matrix file")->required()->check(CLI::ExistingFile);

  std::string adjugate_kind = "left";
  std::string adjugate_file;
  auto* adj = app.add_subcommand("adjugate", "Double-cofactor adjugate Adj[[A]]");
  adj->add_option("--cofactors", adjugate_kind, "left or right double cofactors")
      ->check(CLI::IsMember({"left", "right"}));
  adj->add_option("file", adjugate_file, "Matrix file")->required()->check(CLI::ExistingFile);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Cramer's rule for a quaternion equation");
  solve->add_option("--form", solve_args.form, "ax=y, xa=y, ax=b, xa=b or axb=c")
      ->required()
      ->check(CLI::IsMember({"ax=y", "xa=y", "ax=b", "xa=b", "axb=c"}));
  solve->add_option("--a", solve_args.a, "Coefficient matrix A")->check(CLI::ExistingFile);
  solve->add_option("--b", solve_args.b, "Matrix B")->check(CLI::ExistingFile);
  solve->add_option("--c", solve_args.c, "Matrix C")->check(CLI::ExistingFile);
  solve->add_option("--y", solve_args.y, "Right-hand side vector (n x 1 or 1 x n)")
      ->check(CLI::ExistingFile);
  solve->add_option("--formula", solve_args.formula, "row, column or both (axb=c only)")
      ->check(CLI::IsMember({"row", "column", "both"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
    if (det->parsed()) {
      result.command = "det";
      run_det(det_kind, det_index, det_file, settings, result);
    } else if (rank->parsed()) {
      result.command = "rank";
      result.payload =
          RankPayload{rank_by_principal_minors(parse_matrix_file(rank_file), settings.eval())};
    } else if (inverse->parsed()) {
      result.command = "inverse";
      run_inverse(inverse_side, inverse_file, settings, result);
    } else if (adj->parsed()) {
      result.command = "adjugate";
      run_adjugate(adjugate_kind, adjugate_file, settings, result);
    } else {
      result.command = "solve";
      run_solve(solve_args, settings, result);
    }
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::Error& e) {
    result.status = Status::Error;
    result.message = e.what();
    result.exit_code = kExitUsage;
  } catch (const Error& e) {
    result.status = Status::Error;
    result.error = e.code();
    result.message = e.what();
    result.exit_code = exit_code_for(e.code());
  }
  result.output = Renderer(settings).render(result);
  return result;
}

} // namespace qdet::cli
