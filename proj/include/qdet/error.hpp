#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdet {

enum class ErrorCode {
  ParseError,
  ShapeMismatch,
  SingularMatrix,
  NotHermitian,
  SizeCapExceeded,
  IndexOutOfRange,
  DegenerateSize,
  InvalidPermutation,
  ZeroDivisor,
  // A cross-check between two independent evaluation routes disagreed.
  VerificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Parse failures carry the 1-based position of the offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError,
              message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace qdet
