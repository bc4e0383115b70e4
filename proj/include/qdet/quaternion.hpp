#pragma once

#include "qdet/rational.hpp"

#include <array>
#include <string>
#include <string_view>

namespace qdet {

// a0 + a1 i + a2 j + a3 k with exact rational coefficients.
// i^2 = j^2 = k^2 = ijk = -1, so multiplication is not commutative.
class Quaternion {
public:
  Quaternion() = default;
  Quaternion(Rational real) : c_{std::move(real), 0, 0, 0} {} // NOLINT(google-explicit-constructor)
  Quaternion(long real) : Quaternion(Rational(real)) {}       // NOLINT(google-explicit-constructor)
  Quaternion(Rational a0, Rational a1, Rational a2, Rational a3)
      : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& re() const noexcept { return c_[0]; }
  const Rational& coeff(std::size_t unit) const { return c_.at(unit); }
  const std::array<Rational, 4>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_real() const noexcept { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  // x * conj(x) = a0^2 + a1^2 + a2^2 + a3^2.
  Rational norm() const;

  Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  Quaternion& operator+=(const Quaternion& rhs);
  Quaternion& operator-=(const Quaternion& rhs);
  Quaternion& operator*=(const Quaternion& rhs); // *this = *this * rhs
  Quaternion& scale(const Rational& s);

  friend Quaternion operator+(Quaternion lhs, const Quaternion& rhs) { return lhs += rhs; }
  friend Quaternion operator-(Quaternion lhs, const Quaternion& rhs) { return lhs -= rhs; }
  friend Quaternion operator*(const Quaternion& lhs, const Quaternion& rhs);

  friend bool operator==(const Quaternion& lhs, const Quaternion& rhs) = default;

private:
  std::array<Rational, 4> c_;
};

inline Quaternion conj(const Quaternion& x) { return x.conj(); }

// conj(x) / |x|^2; throws Error(ZeroDivisor) for x = 0.
Quaternion inverse(const Quaternion& x);

// Entry grammar: one or more signed terms with no whitespace,
// term = [sign] [integer ["/" positive-integer]] [i|j|k]. Every term after
// the first needs a sign. The coefficient defaults to 1 when a unit is present.
// `line` and `column` locate the first character for error reporting.
Quaternion parse_quaternion(std::string_view text, std::size_t line = 1, std::size_t column = 1);

// Canonical form: nonzero terms in 1,i,j,k order with explicit coefficients,
// e.g. "2-3i+1j-1k", "3/2j", "0".
std::string format_quaternion(const Quaternion& x);

} // namespace qdet
