#include "polyspace/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyspace/error.hpp"

namespace polyspace {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

bool is_integer(const std::string& tok) {
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') return false;
  return true;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::MalformedInput, "line " + std::to_string(line_no) + ": " + why);
}

std::size_t parse_dim(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || tok[0] == '-' || !is_integer(tok)) malformed(line_no, "bad dimension '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    malformed(line_no, "dimension out of range '" + tok + "'");
  }
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) malformed(1, "missing header");
  ++line_no;
  const auto header = tokens(line);
  if (header.size() != 2) malformed(line_no, "header must be 'rows cols'");
  const std::size_t rows = parse_dim(header[0], line_no);
  const std::size_t cols = parse_dim(header[1], line_no);

  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) malformed(line_no + 1, "expected " + std::to_string(rows) + " rows");
    ++line_no;
    const auto toks = tokens(line);
    if (toks.size() != cols)
      malformed(line_no, "expected " + std::to_string(cols) + " entries, found " + std::to_string(toks.size()));
    for (std::size_t c = 0; c < cols; ++c) {
      if (!is_integer(toks[c])) malformed(line_no, "not an integer '" + toks[c] + "'");
      m(r, c) = BigInt(toks[c]);
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokens(line).empty()) malformed(line_no, "trailing data after the last row");
  }
  return m;
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path.string());
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

}  // namespace polyspace
