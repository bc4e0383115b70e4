#include "qdet/error.hpp"

namespace qdet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::ParseError:
    return "ParseError";
  case ErrorCode::ShapeMismatch:
    return "ShapeMismatch";
  case ErrorCode::SingularMatrix:
    return "SingularMatrix";
  case ErrorCode::NotHermitian:
    return "NotHermitian";
  case ErrorCode::SizeCapExceeded:
    return "SizeCapExceeded";
  case ErrorCode::IndexOutOfRange:
    return "IndexOutOfRange";
  case ErrorCode::DegenerateSize:
    return "DegenerateSize";
  case ErrorCode::InvalidPermutation:
    return "InvalidPermutation";
  case ErrorCode::ZeroDivisor:
    return "ZeroDivisor";
  case ErrorCode::VerificationFailed:
    return "VerificationFailed";
  }
  return "Unknown";
}

} // namespace qdet
