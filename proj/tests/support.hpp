#pragma once

// Shared fixtures and random generators for the test suites.

#include "qdet/qmatrix.hpp"

#include <random>

namespace qdet::testing {

inline Quaternion q(long a0, long a1 = 0, long a2 = 0, long a3 = 0) { return {a0, a1, a2, a3}; }
inline const Quaternion I = Quaternion::i();
inline const Quaternion J = Quaternion::j();
inline const Quaternion K = Quaternion::k();

// Worked example of a two-sided equation A X B = C.
inline QMatrix example_a() { return {{I, -J, K}, {K, -I, 1}, {2, K, -J}}; }
inline QMatrix example_b() { return {{-K, J, 2}, {I, K, I}, {-J, 1, I}}; }
inline QMatrix example_c() { return {{1, I, J}, {K, J, -2}, {I, 1, J}}; }

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Rational in [-bound, bound] with denominator 1, 2 or 3.
  Rational rational(long bound = 3) {
    const long den = integer(1, 3);
    return {integer(-bound * den, bound * den), den};
  }

  // Integer quaternion, coefficients in [-bound, bound].
  Quaternion small(long bound = 2) {
    return {integer(-bound, bound), integer(-bound, bound), integer(-bound, bound),
            integer(-bound, bound)};
  }

  Quaternion quaternion(long bound = 3) {
    return {rational(bound), rational(bound), rational(bound), rational(bound)};
  }

  Quaternion complex(long bound = 2) {
    return {integer(-bound, bound), integer(-bound, bound), 0, 0};
  }

  QMatrix matrix(std::size_t rows, std::size_t cols, bool rational_entries = false) {
    QMatrix m(rows, cols);
    for (std::size_t i = 1; i <= rows; ++i) {
      for (std::size_t j = 1; j <= cols; ++j) {
        m(i, j) = rational_entries ? quaternion() : small();
      }
    }
    return m;
  }

  QMatrix hermitian(std::size_t n, bool rational_entries = true) {
    QMatrix h(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
      h(i, i) = rational_entries ? Quaternion(rational()) : Quaternion(integer(-3, 3));
      for (std::size_t j = i + 1; j <= n; ++j) {
        h(i, j) = rational_entries ? quaternion() : small();
        h(j, i) = h(i, j).conj();
      }
    }
    return h;
  }

  // Lower times upper triangular, nonzero diagonals: always invertible.
  QMatrix invertible(std::size_t n) {
    QMatrix lower(n, n), upper(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == j) {
          lower(i, j) = nonzero();
          upper(i, j) = nonzero();
        } else if (i > j) {
          lower(i, j) = small();
        } else {
          upper(i, j) = small();
        }
      }
    }
    return lower * upper;
  }

  Quaternion nonzero(long bound = 2) {
    Quaternion x;
    do {
      x = small(bound);
    } while (x.is_zero());
    return x;
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(integer(1, static_cast<long>(n)));
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace qdet::testing
