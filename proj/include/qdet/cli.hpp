#pragma once

#include "qdet/error.hpp"
#include "qdet/solvers.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 64;

// 2 parse, 3 shape, 4 singular, 5 not Hermitian, 6 size cap. Index errors
// come from --index and are reported as usage errors.
int exit_code_for(ErrorCode code) noexcept;

enum class Status { Ok, Error };

struct DetPayload {
  std::string kind; // rdet, cdet, det, ddet
  std::optional<std::size_t> index;
  Quaternion value;
};

struct RankPayload {
  std::size_t rank;
};

using Payload = std::variant<std::monostate, DetPayload, RankPayload, QMatrix, SolveReport>;

struct CommandResult {
  Status status = Status::Ok;
  std::string command;
  Payload payload;
  std::vector<std::string> diagnostics;
  // Empty on success and on usage errors.
  std::optional<ErrorCode> error;
  std::string message;
  int exit_code = kExitOk;
  // What the program prints on stdout (text or JSON, per --output).
  std::string output;
};

// Runs one command line; `args` excludes the program name.
//
//   det      --kind rdet|cdet|det|ddet [--index i] FILE
//   rank     FILE
//   inverse  [--side left|right|hermitian] FILE
//   adjugate [--cofactors left|right] FILE
//   solve    --form ax=y|xa=y|ax=b|xa=b|axb=c --a FILE [--b FILE] [--c FILE]
//            [--y FILE] [--formula row|column|both]
//
// Common flags: --output text|json, --max-n N, --workers W, --verify,
// --float [--tol T].
CommandResult run_command(std::span<const std::string> args);

} // namespace qdet::cli
