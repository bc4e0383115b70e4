#pragma once

#include "qdet/qmatrix.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qdet {

// Matrix file format:
//
//   rows cols
//   e11 e12 ... e1c
//   ...
//
// Entries are quaternion literals separated by spaces or tabs, one matrix
// row per line. Blank lines and lines starting with '#' are ignored.
// Malformed literals raise ParseError with line and column; wrong entry or
// row counts raise Error(ShapeMismatch).
QMatrix parse_matrix(std::string_view text);
QMatrix parse_matrix_file(const std::filesystem::path& path);

// Canonical text: header line, entries separated by one space, trailing
// newline. parse_matrix(format_matrix(m)) == m.
std::string format_matrix(const QMatrix& m);

} // namespace qdet
