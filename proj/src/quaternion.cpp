#include "qdet/quaternion.hpp"

#include "qdet/error.hpp"

#include <cctype>

namespace qdet {

Rational Quaternion::norm() const {
  Rational n;
  for (const auto& c : c_) {
    n += c * c;
  }
  return n;
}

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
  for (std::size_t u = 0; u < 4; ++u) {
    c_[u] += rhs.c_[u];
  }
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& rhs) {
  for (std::size_t u = 0; u < 4; ++u) {
    c_[u] -= rhs.c_[u];
  }
  return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& rhs) {
  *this = *this * rhs;
  return *this;
}

Quaternion& Quaternion::scale(const Rational& s) {
  for (auto& c : c_) {
    c *= s;
  }
  return *this;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  const auto& a = x.c_;
  const auto& b = y.c_;
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion inverse(const Quaternion& x) {
  if (x.is_zero()) {
    throw Error(ErrorCode::ZeroDivisor, "inverse of zero quaternion");
  }
  const Rational inv_norm = Rational(1) / x.norm();
  return x.conj().scale(inv_norm);
}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int unit_index(char c) {
  switch (c) {
  case 'i':
    return 1;
  case 'j':
    return 2;
  case 'k':
    return 3;
  default:
    return -1;
  }
}

} // namespace

Quaternion parse_quaternion(std::string_view text, std::size_t line, std::size_t column) {
  if (text.empty()) {
    throw ParseError("empty quaternion literal", line, column);
  }
  std::array<Rational, 4> c;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' before term", line, column + pos);
    }

    const std::size_t num_start = pos;
    while (pos < text.size() && is_digit(text[pos])) {
      ++pos;
    }
    const bool has_coeff = pos > num_start;
    Rational coeff(1);
    if (has_coeff) {
      std::string_view num = text.substr(num_start, pos - num_start);
      std::string_view den = "1";
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_start = pos;
        while (pos < text.size() && is_digit(text[pos])) {
          ++pos;
        }
        if (pos == den_start) {
          throw ParseError("expected denominator after '/'", line, column + pos);
        }
        den = text.substr(den_start, pos - den_start);
      }
      try {
        coeff = Rational::from_string(std::string(num) + "/" + std::string(den));
      } catch (const Error&) {
        throw ParseError("zero denominator", line, column + num_start);
      }
    } else if (pos < text.size() && text[pos] == '/') {
      throw ParseError("'/' without numerator", line, column + pos);
    }

    int unit = 0;
    if (pos < text.size() && unit_index(text[pos]) > 0) {
      unit = unit_index(text[pos]);
      ++pos;
    } else if (!has_coeff) {
      throw ParseError("expected coefficient or unit", line, column + pos);
    }
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", line, column + pos);
    }

    c[static_cast<std::size_t>(unit)] += negative ? -coeff : coeff;
    first = false;
  }
  return {c[0], c[1], c[2], c[3]};
}

std::string format_quaternion(const Quaternion& x) {
  static constexpr std::array<std::string_view, 4> units = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t u = 0; u < 4; ++u) {
    const Rational& c = x.coeff(u);
    if (c.is_zero()) {
      continue;
    }
    if (c.sign() > 0 && !out.empty()) {
      out += '+';
    }
    out += c.to_string();
    out += units[u];
  }
  return out.empty() ? "0" : out;
}

} // namespace qdet
