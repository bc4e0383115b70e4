#include "qdet/matrix_io.hpp"

#include "qdet/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace qdet {

namespace {

struct Token {
  std::string_view text;
  std::size_t column; // 1-based
};

std::vector<Token> split_fields(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
      ++pos;
    }
    if (pos > start) {
      out.push_back({line.substr(start, pos - start), start + 1});
    }
  }
  return out;
}

std::size_t parse_dimension(const Token& tok, std::size_t line) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0) {
    throw ParseError("expected a positive integer dimension", line, tok.column);
  }
  return value;
}

} // namespace

QMatrix parse_matrix(std::string_view text) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_header = false;
  std::vector<Quaternion> entries;
  std::size_t rows_read = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().text.front() == '#') {
      continue;
    }
    if (!have_header) {
      if (fields.size() != 2) {
        throw ParseError("header must be 'rows cols'", line_no, fields.front().column);
      }
      rows = parse_dimension(fields[0], line_no);
      cols = parse_dimension(fields[1], line_no);
      have_header = true;
      entries.reserve(rows * cols);
      continue;
    }
    if (rows_read == rows) {
      throw Error(ErrorCode::ShapeMismatch, "more than " + std::to_string(rows) + " rows (line " +
                                                std::to_string(line_no) + ")");
    }
    if (fields.size() != cols) {
      throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(cols) +
                                                " entries on line " + std::to_string(line_no) +
                                                ", found " + std::to_string(fields.size()));
    }
    for (const auto& f : fields) {
      entries.push_back(parse_quaternion(f.text, line_no, f.column));
    }
    ++rows_read;
  }

  if (!have_header) {
    throw ParseError("missing 'rows cols' header", line_no, 1);
  }
  if (rows_read != rows) {
    throw Error(ErrorCode::ShapeMismatch,
                "expected " + std::to_string(rows) + " rows, found " + std::to_string(rows_read));
  }
  return {rows, cols, std::move(entries)};
}

QMatrix parse_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'", 0, 0);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

std::string format_matrix(const QMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) {
        out += ' ';
      }
      out += format_quaternion(m(i, j));
    }
    out += '\n';
  }
  return out;
}

} // namespace qdet
