#include "qdet/ncdet.hpp"

#include "qdet/cycles.hpp"
#include "qdet/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

namespace qdet {

namespace {

// Quaternion with integer coefficients; the permutation sum runs on the
// matrix scaled by the common denominator of its entries.
struct IntQuat {
  std::array<mpz_class, 4> c;
};

// out = x * y; out must not alias x or y.
void mul_into(IntQuat& out, const IntQuat& x, const IntQuat& y) {
  const auto& a = x.c;
  const auto& b = y.c;
  auto* o = &out.c[0];
  mpz_mul(o[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
  mpz_submul(o[0].get_mpz_t(), a[1].get_mpz_t(), b[1].get_mpz_t());
  mpz_submul(o[0].get_mpz_t(), a[2].get_mpz_t(), b[2].get_mpz_t());
  mpz_submul(o[0].get_mpz_t(), a[3].get_mpz_t(), b[3].get_mpz_t());

  mpz_mul(o[1].get_mpz_t(), a[0].get_mpz_t(), b[1].get_mpz_t());
  mpz_addmul(o[1].get_mpz_t(), a[1].get_mpz_t(), b[0].get_mpz_t());
  mpz_addmul(o[1].get_mpz_t(), a[2].get_mpz_t(), b[3].get_mpz_t());
  mpz_submul(o[1].get_mpz_t(), a[3].get_mpz_t(), b[2].get_mpz_t());

  mpz_mul(o[2].get_mpz_t(), a[0].get_mpz_t(), b[2].get_mpz_t());
  mpz_submul(o[2].get_mpz_t(), a[1].get_mpz_t(), b[3].get_mpz_t());
  mpz_addmul(o[2].get_mpz_t(), a[2].get_mpz_t(), b[0].get_mpz_t());
  mpz_addmul(o[2].get_mpz_t(), a[3].get_mpz_t(), b[1].get_mpz_t());

  mpz_mul(o[3].get_mpz_t(), a[0].get_mpz_t(), b[3].get_mpz_t());
  mpz_addmul(o[3].get_mpz_t(), a[1].get_mpz_t(), b[2].get_mpz_t());
  mpz_submul(o[3].get_mpz_t(), a[2].get_mpz_t(), b[1].get_mpz_t());
  mpz_addmul(o[3].get_mpz_t(), a[3].get_mpz_t(), b[0].get_mpz_t());
}

struct ScaledMatrix {
  std::size_t n = 0;
  std::vector<IntQuat> entries; // row-major, 0-based
  std::vector<char> zero;
  mpz_class denominator; // original = entries / denominator

  const IntQuat& at(std::size_t row, std::size_t col) const {
    return entries[(row - 1) * n + col - 1];
  }
  bool is_zero(std::size_t row, std::size_t col) const {
    return zero[(row - 1) * n + col - 1] != 0;
  }
};

ScaledMatrix scale_to_integers(const QMatrix& a) {
  ScaledMatrix s;
  s.n = a.rows();
  s.denominator = 1;
  for (const auto& q : a.data()) {
    for (const auto& c : q.coeffs()) {
      mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(), c.raw().get_den_mpz_t());
    }
  }
  s.entries.resize(a.data().size());
  s.zero.resize(a.data().size());
  for (std::size_t e = 0; e < a.data().size(); ++e) {
    const auto& q = a.data()[e];
    s.zero[e] = q.is_zero() ? 1 : 0;
    for (std::size_t u = 0; u < 4; ++u) {
      const mpq_class& c = q.coeff(u).raw();
      s.entries[e].c[u] = c.get_num() * (s.denominator / c.get_den());
    }
  }
  return s;
}

// Lexicographic unranking over S_n, images 1-based.
std::vector<std::size_t> nth_permutation(std::size_t n, unsigned long long rank) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<unsigned long long> fact(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    fact[k] = fact[k - 1] * k;
  }
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t pos = n; pos >= 1; --pos) {
    const auto idx = static_cast<std::size_t>(rank / fact[pos - 1]);
    rank %= fact[pos - 1];
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

// Signed sum of the monomials of permutations with lexicographic rank in
// [first, first + count).
IntQuat partial_sum(const ScaledMatrix& m, std::size_t anchor, CycleOrder order,
                    unsigned long long first, unsigned long long count) {
  IntQuat sum;
  IntQuat prod;
  IntQuat tmp;
  CycleDecomposition cycles;
  std::vector<char> seen;
  auto images = nth_permutation(m.n, first);
  for (unsigned long long done = 0; done < count; ++done) {
    if (done > 0) {
      std::next_permutation(images.begin(), images.end());
    }
    bool has_zero = false;
    for (std::size_t x = 1; x <= m.n && !has_zero; ++x) {
      has_zero = m.is_zero(x, images[x - 1]);
    }
    if (has_zero) {
      continue;
    }
    canonicalize_unchecked(images, anchor, order, cycles, seen);
    bool started = false;
    cycles.for_each_factor([&](std::size_t row, std::size_t col) {
      if (!started) {
        prod = m.at(row, col);
        started = true;
        return;
      }
      mul_into(tmp, prod, m.at(row, col));
      std::swap(prod, tmp);
    });
    for (std::size_t u = 0; u < 4; ++u) {
      if (cycles.sign() > 0) {
        sum.c[u] += prod.c[u];
      } else {
        sum.c[u] -= prod.c[u];
      }
    }
  }
  return sum;
}

unsigned long long factorial(std::size_t n) {
  unsigned long long f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

void check_evaluable(const QMatrix& a, std::size_t index, const EvalOptions& opts,
                     const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " needs a square matrix");
  }
  if (index < 1 || index > a.rows()) {
    throw Error(ErrorCode::IndexOutOfRange, std::string(what) + " index " + std::to_string(index) +
                                                " outside 1.." + std::to_string(a.rows()));
  }
  if (a.rows() > opts.max_n) {
    throw Error(ErrorCode::SizeCapExceeded, std::string(what) + " of order " +
                                                std::to_string(a.rows()) + " exceeds cap " +
                                                std::to_string(opts.max_n));
  }
}

// Below this many monomials threading costs more than it saves.
constexpr unsigned long long kParallelThreshold = 5040;

Quaternion permutation_sum(const QMatrix& a, std::size_t anchor, CycleOrder order,
                           const EvalOptions& opts) {
  const ScaledMatrix m = scale_to_integers(a);
  const unsigned long long total = factorial(m.n);
  unsigned workers =
      opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.workers;
  if (total < kParallelThreshold) {
    workers = 1;
  }
  workers = static_cast<unsigned>(std::min<unsigned long long>(workers, total));

  std::vector<IntQuat> partials(workers);
  if (workers == 1) {
    partials[0] = partial_sum(m, anchor, order, 0, total);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const unsigned long long chunk = total / workers;
    const unsigned long long extra = total % workers;
    unsigned long long first = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const unsigned long long count = chunk + (w < extra ? 1 : 0);
      threads.emplace_back([&partials, &m, anchor, order, w, first, count] {
        partials[w] = partial_sum(m, anchor, order, first, count);
      });
      first += count;
    }
    for (auto& t : threads) {
      t.join();
    }
  }

  IntQuat sum;
  for (const auto& p : partials) {
    for (std::size_t u = 0; u < 4; ++u) {
      sum.c[u] += p.c[u];
    }
  }
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), m.denominator.get_mpz_t(), m.n);
  return {Rational(mpq_class(sum.c[0], den)), Rational(mpq_class(sum.c[1], den)),
          Rational(mpq_class(sum.c[2], den)), Rational(mpq_class(sum.c[3], den))};
}

} // namespace

Quaternion rdet(const QMatrix& a, std::size_t i, const EvalOptions& opts) {
  check_evaluable(a, i, opts, "rdet");
  return permutation_sum(a, i, CycleOrder::Left, opts);
}

Quaternion cdet(const QMatrix& a, std::size_t j, const EvalOptions& opts) {
  check_evaluable(a, j, opts, "cdet");
  return permutation_sum(a, j, CycleOrder::Right, opts);
}

Quaternion right_cofactor(const QMatrix& a, std::size_t i, std::size_t j, const EvalOptions& opts) {
  if (!a.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, "right_cofactor needs a square matrix");
  }
  (void)a.at(i, j);
  const std::size_t n = a.rows();
  if (n == 1) {
    return Quaternion(1);
  }
  if (i == j) {
    return rdet(delete_row_col(a, i, i), 1, opts);
  }
  const QMatrix minor = delete_row_col(replace_column(a, j, a.column(i)), i, i);
  return -rdet(minor, j < i ? j : j - 1, opts);
}

Quaternion left_cofactor(const QMatrix& a, std::size_t i, std::size_t j, const EvalOptions& opts) {
  if (!a.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, "left_cofactor needs a square matrix");
  }
  (void)a.at(i, j);
  const std::size_t n = a.rows();
  if (n == 1) {
    return Quaternion(1);
  }
  if (i == j) {
    return cdet(delete_row_col(a, j, j), 1, opts);
  }
  const QMatrix minor = delete_row_col(replace_row(a, i, a.row(j)), j, j);
  return -cdet(minor, i < j ? i : i - 1, opts);
}

Rational det_hermitian(const QMatrix& h, const EvalOptions& opts) {
  if (!is_hermitian(h)) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
  }
  const Quaternion value = rdet(h, 1, opts);
  if (!value.is_real()) {
    throw Error(ErrorCode::VerificationFailed,
                "Hermitian determinant is not real: " + format_quaternion(value));
  }
  if (opts.verify) {
    for (std::size_t k = 1; k <= h.rows(); ++k) {
      if ((k > 1 && rdet(h, k, opts) != value) || cdet(h, k, opts) != value) {
        throw Error(ErrorCode::VerificationFailed,
                    "row and column determinants of a Hermitian matrix disagree at index " +
                        std::to_string(k));
      }
    }
  }
  return value.re();
}

Rational ddet(const QMatrix& a, const EvalOptions& opts) {
  if (!a.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, "ddet needs a square matrix");
  }
  Rational value = det_hermitian(gram_left(a), opts);
  if (opts.verify && det_hermitian(gram_right(a), opts) != value) {
    throw Error(ErrorCode::VerificationFailed, "det(A*A) and det(AA*) disagree");
  }
  return value;
}

std::size_t rank_by_principal_minors(const QMatrix& h, const EvalOptions& opts) {
  if (!is_hermitian(h)) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
  }
  const std::size_t n = h.rows();
  if (n > opts.max_n) {
    throw Error(ErrorCode::SizeCapExceeded, "rank of order " + std::to_string(n) + " exceeds cap " +
                                                std::to_string(opts.max_n));
  }
  for (std::size_t k = n; k >= 1; --k) {
    // Walk all k-subsets of {1..n} via a selection mask.
    std::vector<char> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), 1);
    std::vector<std::size_t> indices;
    do {
      indices.clear();
      for (std::size_t x = 0; x < n; ++x) {
        if (mask[x]) {
          indices.push_back(x + 1);
        }
      }
      if (!det_hermitian(principal_submatrix(h, indices), opts).is_zero()) {
        return k;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return 0;
}

} // namespace qdet
