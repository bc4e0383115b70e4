#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdet/error.hpp"
#include "qdet/ncdet.hpp"
#include "qdet/oracle.hpp"
#include "support.hpp"

#include <algorithm>
#include <numeric>

using namespace qdet;
using namespace qdet::testing;

namespace {

// Reference evaluator written directly from the monomial templates: walk
// the anchor's cycle, then the remaining cycles by ascending minimum
// (row determinant) or descending minimum with the anchor's cycle last
// (column determinant). Plain rational arithmetic, no shared code with the
// library evaluator.
Quaternion reference_det(const QMatrix& a, std::size_t anchor, bool row) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 1);
  Quaternion total;
  do {
    std::vector<std::vector<std::size_t>> walks;
    std::vector<bool> seen(n + 1, false);
    auto walk_from = [&](std::size_t start) {
      std::vector<std::size_t> w;
      std::size_t x = start;
      do {
        w.push_back(x);
        seen[x] = true;
        x = p[x - 1];
      } while (x != start);
      return w;
    };
    const auto anchor_walk = walk_from(anchor);
    std::vector<std::vector<std::size_t>> others;
    for (std::size_t m = 1; m <= n; ++m) {
      if (!seen[m]) {
        others.push_back(walk_from(m));
      }
    }
    if (row) {
      walks.push_back(anchor_walk);
      walks.insert(walks.end(), others.begin(), others.end());
    } else {
      walks.insert(walks.end(), others.rbegin(), others.rend());
      walks.push_back(anchor_walk);
    }
    Quaternion prod(1);
    for (const auto& w : walks) {
      for (std::size_t s = 0; s < w.size(); ++s) {
        prod = prod * a(w[s], w[(s + 1) % w.size()]);
      }
    }
    const std::size_t r = walks.size();
    total += (n - r) % 2 == 0 ? prod : -prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

oracle::ComplexRational as_complex(const Quaternion& x) { return {x.re(), x.coeff(1)}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::VerificationFailed;
}

QMatrix scale_row(QMatrix a, std::size_t i, const Quaternion& b) {
  for (std::size_t j = 1; j <= a.cols(); ++j) {
    a(i, j) = b * a(i, j);
  }
  return a;
}

QMatrix scale_column(QMatrix a, std::size_t j, const Quaternion& b) {
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    a(i, j) = a(i, j) * b;
  }
  return a;
}

} // namespace

TEST_SUITE("row and column determinants") {
  TEST_CASE("2x2 templates") {
    Gen gen(2);
    for (int trial = 0; trial < 50; ++trial) {
      const Quaternion a = gen.quaternion(), b = gen.quaternion(), c = gen.quaternion(),
                       d = gen.quaternion();
      const QMatrix m{{a, b}, {c, d}};
      CHECK(rdet(m, 1) == a * d - b * c);
      CHECK(rdet(m, 2) == d * a - c * b);
      CHECK(cdet(m, 1) == d * a - b * c);
      CHECK(cdet(m, 2) == a * d - c * b);
    }
  }

  TEST_CASE("row determinants differ off the Hermitian class") {
    const QMatrix m{{I, J}, {K, 1}};
    CHECK(rdet(m, 1) == q(0));
    CHECK(rdet(m, 2) == 2 * I);
  }

  TEST_CASE("1x1") {
    const Quaternion x(1, -2, Rational(1, 3), 4);
    CHECK(rdet(QMatrix{{x}}, 1) == x);
    CHECK(cdet(QMatrix{{x}}, 1) == x);
  }

  TEST_CASE("first column determinant of the worked example") {
    const QMatrix m{{2 * K, J + 3 * K, -J - K}, {-2 - 4 * I, 3, I}, {-4 + 2 * I, -I, 3}};
    CHECK(cdet(m, 1) == 24 * J + 8 * K);
  }

  TEST_CASE("agrees with the reference evaluator") {
    Gen gen(41);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      const QMatrix a = gen.matrix(n, n, trial % 2 == 0);
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(rdet(a, k) == reference_det(a, k, true));
        CHECK(cdet(a, k) == reference_det(a, k, false));
      }
    }
  }

  TEST_CASE("column determinant mirrors the row determinant of the adjoint") {
    Gen gen(43);
    for (int trial = 0; trial < 30; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 5));
      const QMatrix a = gen.matrix(n, n);
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(cdet(a, k) == conj(rdet(adjoint(a), k)));
      }
    }
  }

  TEST_CASE("identity monomial carries sign +1") {
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(rdet(QMatrix::identity(n), 1) == q(1));
      CHECK(cdet(QMatrix::identity(n), n) == q(1));
    }
  }

  TEST_CASE("classical reduction on complex-subfield matrices") {
    // Exhaustive 2x2 over {-1, 0, 1, i}.
    const Quaternion values[] = {q(-1), q(0), q(1), I};
    for (int code = 0; code < 256; ++code) {
      const QMatrix m{{values[code & 3], values[(code >> 2) & 3]},
                      {values[(code >> 4) & 3], values[(code >> 6) & 3]}};
      const auto classical = oracle::classical_det(oracle::complex_subfield(m));
      for (std::size_t k = 1; k <= 2; ++k) {
        CHECK(as_complex(rdet(m, k)) == classical);
        CHECK(as_complex(cdet(m, k)) == classical);
        CHECK(rdet(m, k).is_real() == classical.im.is_zero());
      }
    }
    Gen gen(7);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(3, 5));
      QMatrix m(n, n);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          m(i, j) = gen.complex();
        }
      }
      const auto classical = oracle::classical_det(oracle::complex_subfield(m));
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(as_complex(rdet(m, k)) == classical);
        CHECK(as_complex(cdet(m, k)) == classical);
      }
    }
  }

  TEST_CASE("errors") {
    const QMatrix a = example_a();
    CHECK(code_of([&] { (void)rdet(a, 0); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([&] { (void)cdet(a, 4); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { (void)rdet(QMatrix(2, 3), 1); }) == ErrorCode::ShapeMismatch);
    CHECK(code_of([] { (void)rdet(QMatrix::identity(10), 1); }) == ErrorCode::SizeCapExceeded);
    CHECK(code_of([] { (void)cdet(QMatrix::identity(4), 1, {.max_n = 3}); }) ==
          ErrorCode::SizeCapExceeded);
    CHECK(rdet(QMatrix::identity(4), 2, {.max_n = 4}) == q(1));
  }

  TEST_CASE("worker count does not change the result") {
    Gen gen(99);
    const QMatrix a = gen.matrix(7, 7, true);
    const Quaternion serial = rdet(a, 3, {.workers = 1});
    CHECK(rdet(a, 3, {.workers = 3}) == serial);
    CHECK(rdet(a, 3, {.workers = 8}) == serial);
    CHECK(cdet(a, 5, {.workers = 1}) == cdet(a, 5, {.workers = 5}));
  }
}

TEST_SUITE("determinant laws") {
  TEST_CASE("left scalar on a row, right scalar on a column") {
    Gen gen(13);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      const QMatrix a = gen.matrix(n, n);
      const Quaternion b = gen.small();
      const std::size_t k = gen.index(n);
      CHECK(rdet(scale_row(a, k, b), k) == b * rdet(a, k));
      CHECK(cdet(scale_column(a, k, b), k) == cdet(a, k) * b);
    }
  }

  TEST_CASE("additivity in any row and any column") {
    Gen gen(19);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(2, 4));
      const QMatrix a = gen.matrix(n, n);
      const QMatrix b = gen.matrix(n, 1);
      const std::size_t t = gen.index(n);
      const std::size_t k = gen.index(n);

      std::vector<Quaternion> rest(n);
      for (std::size_t j = 1; j <= n; ++j) {
        rest[j - 1] = a(t, j) - b(j, 1);
      }
      const QVector b_row(std::vector<Quaternion>(b.data().begin(), b.data().end()),
                          Orientation::Row);
      const QVector c_row(rest, Orientation::Row);
      CHECK(rdet(a, k) == rdet(replace_row(a, t, b_row), k) + rdet(replace_row(a, t, c_row), k));
      CHECK(cdet(a, k) == cdet(replace_row(a, t, b_row), k) + cdet(replace_row(a, t, c_row), k));

      for (std::size_t i = 1; i <= n; ++i) {
        rest[i - 1] = a(i, t) - b(i, 1);
      }
      const QVector c_col(rest, Orientation::Column);
      CHECK(rdet(a, k) ==
            rdet(replace_column(a, t, b.column(1)), k) + rdet(replace_column(a, t, c_col), k));
      CHECK(cdet(a, k) ==
            cdet(replace_column(a, t, b.column(1)), k) + cdet(replace_column(a, t, c_col), k));
    }
  }

  TEST_CASE("Hermitian matrices: all row and column determinants agree and are real") {
    Gen gen(23);
    for (int trial = 0; trial < 60; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      const QMatrix h = gen.hermitian(n);
      const Quaternion first = rdet(h, 1);
      CHECK(first.is_real());
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(rdet(h, k) == first);
        CHECK(cdet(h, k) == first);
      }
      CHECK(det_hermitian(h, {.verify = true}) == first.re());
    }
  }

  TEST_CASE("Hermitian row or column replaced by a combination of the others") {
    Gen gen(29);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(2, 4));
      const QMatrix h = gen.hermitian(n, false);
      const std::size_t i = gen.index(n);
      std::vector<Quaternion> row(n), col(n);
      for (std::size_t other = 1; other <= n; ++other) {
        if (other == i) {
          continue;
        }
        const Quaternion c = gen.small();
        for (std::size_t s = 1; s <= n; ++s) {
          row[s - 1] += c * h(other, s);
          col[s - 1] += h(s, other) * c;
        }
      }
      const QMatrix by_row = replace_row(h, i, QVector(row, Orientation::Row));
      const QMatrix by_col = replace_column(h, i, QVector(col, Orientation::Column));
      CHECK(rdet(by_row, i).is_zero());
      CHECK(cdet(by_row, i).is_zero());
      CHECK(rdet(by_col, i).is_zero());
      CHECK(cdet(by_col, i).is_zero());
    }
  }
}

TEST_SUITE("cofactors") {
  TEST_CASE("2x2 cofactors") {
    Gen gen(31);
    const Quaternion a = gen.quaternion(), b = gen.quaternion(), c = gen.quaternion(),
                     d = gen.quaternion();
    const QMatrix m{{a, b}, {c, d}};
    CHECK(right_cofactor(m, 1, 1) == d);
    CHECK(right_cofactor(m, 1, 2) == -c);
    CHECK(left_cofactor(m, 1, 1) == d);
    CHECK(left_cofactor(m, 2, 1) == -b);
  }

  TEST_CASE("identity and 1x1") {
    const QMatrix id = QMatrix::identity(3);
    for (std::size_t i = 1; i <= 3; ++i) {
      for (std::size_t j = 1; j <= 3; ++j) {
        CHECK(right_cofactor(id, i, j) == q(i == j ? 1 : 0));
        CHECK(left_cofactor(id, i, j) == q(i == j ? 1 : 0));
      }
    }
    CHECK(right_cofactor(QMatrix{{I}}, 1, 1) == q(1));
    CHECK(left_cofactor(QMatrix{{I}}, 1, 1) == q(1));
  }

  TEST_CASE("expansions reproduce the double determinant of the example") {
    const QMatrix right = gram_right(example_a());
    const QMatrix left = gram_left(example_a());
    Quaternion by_row, by_col;
    for (std::size_t j = 1; j <= 3; ++j) {
      by_row += right(1, j) * right_cofactor(right, 1, j);
      by_col += left_cofactor(left, j, 1) * left(j, 1);
    }
    CHECK(by_row == q(8));
    CHECK(by_col == q(8));
  }

  TEST_CASE("row and column expansions on random matrices") {
    Gen gen(37);
    for (int trial = 0; trial < 30; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      const QMatrix a = gen.matrix(n, n, trial % 3 == 0);
      for (std::size_t k = 1; k <= n; ++k) {
        Quaternion by_row, by_col;
        for (std::size_t s = 1; s <= n; ++s) {
          by_row += a(k, s) * right_cofactor(a, k, s);
          by_col += left_cofactor(a, s, k) * a(s, k);
        }
        CHECK(by_row == rdet(a, k));
        CHECK(by_col == cdet(a, k));
      }
    }
  }

  TEST_CASE("errors") {
    CHECK(code_of([] { (void)right_cofactor(QMatrix::identity(2), 3, 1); }) ==
          ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { (void)left_cofactor(QMatrix(2, 3), 1, 1); }) == ErrorCode::ShapeMismatch);
  }
}

TEST_SUITE("Hermitian and double determinants") {
  TEST_CASE("values from the worked example") {
    CHECK(det_hermitian(gram_left(example_a())) == Rational(8));
    CHECK(det_hermitian(gram_right(example_b())) == Rational(4));
    CHECK(ddet(example_a(), {.verify = true}) == Rational(8));
    CHECK(ddet(example_b(), {.verify = true}) == Rational(4));
  }

  TEST_CASE("small cases") {
    CHECK(det_hermitian(QMatrix{{2, I}, {-I, 3}}) == Rational(5));
    const Quaternion x(1, 2, -1, Rational(1, 2));
    CHECK(ddet(QMatrix{{x}}) == x.norm());
    CHECK(ddet(QMatrix::identity(5)) == Rational(1));
  }

  TEST_CASE("non-Hermitian input is rejected") {
    CHECK(code_of([] { (void)det_hermitian(example_a()); }) == ErrorCode::NotHermitian);
    CHECK(code_of([] { (void)rank_by_principal_minors(QMatrix{{I}}); }) == ErrorCode::NotHermitian);
  }

  TEST_CASE("det(A*A) = det(AA*)") {
    Gen gen(47);
    for (int trial = 0; trial < 30; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      const QMatrix a = gen.matrix(n, n, trial % 2 == 0);
      CHECK(det_hermitian(gram_left(a)) == det_hermitian(gram_right(a)));
      CHECK(ddet(a).sign() >= 0);
    }
  }

  TEST_CASE("right-dependent columns give a zero double determinant") {
    Gen gen(53);
    for (int trial = 0; trial < 30; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(2, 4));
      QMatrix a = gen.matrix(n, n);
      const std::size_t target = gen.index(n);
      for (std::size_t i = 1; i <= n; ++i) {
        Quaternion sum;
        for (std::size_t j = 1; j <= n; ++j) {
          if (j != target) {
            sum += a(i, j) * Quaternion(static_cast<long>(j), 1, -1, static_cast<long>(trial % 3));
          }
        }
        a(i, target) = sum;
      }
      CHECK(det_hermitian(gram_left(a)).is_zero());
      CHECK(ddet(a).is_zero());
      CHECK(rank_by_principal_minors(gram_left(a)) < n);
    }
  }

  TEST_CASE("independent columns give a nonzero double determinant") {
    // Products of triangular matrices with nonzero diagonals are invertible.
    Gen gen(59);
    for (int trial = 0; trial < 30; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      QMatrix lower(n, n), upper(n, n);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          if (i == j) {
            do {
              lower(i, j) = gen.small();
            } while (lower(i, j).is_zero());
            do {
              upper(i, j) = gen.small();
            } while (upper(i, j).is_zero());
          } else if (i > j) {
            lower(i, j) = gen.small();
          } else {
            upper(i, j) = gen.small();
          }
        }
      }
      const QMatrix a = lower * upper;
      CHECK_FALSE(ddet(a).is_zero());
      CHECK(rank_by_principal_minors(gram_left(a)) == n);
    }
  }

  TEST_CASE("rank by principal minors") {
    CHECK(rank_by_principal_minors(QMatrix::identity(4)) == 4);
    CHECK(rank_by_principal_minors(QMatrix(3, 3)) == 0);
    CHECK(rank_by_principal_minors(gram_left(example_a())) == 3);
    // Rank one: a single column repeated with right multiples.
    const QMatrix a{{1, J, 2 * K}, {I, K, 2 * (I * K)}, {J, -1, 2 * (J * K)}};
    CHECK(rank_by_principal_minors(gram_left(a)) == 1);
    // Diagonal with zeros.
    const QMatrix d{{0, 0, 0}, {0, 3, 0}, {0, 0, 0}};
    CHECK(rank_by_principal_minors(d) == 1);
  }
}
