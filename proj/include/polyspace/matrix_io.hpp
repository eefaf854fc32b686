#pragma once

#include <filesystem>
#include <iosfwd>

#include "polyspace/int_matrix.hpp"

namespace polyspace {

// Text format: a header line "rows cols", then `rows` lines holding `cols`
// whitespace-separated decimal integers (optional leading '-', any size).
// Blank lines after the last row are ignored. Any deviation throws
// Error{MalformedInput} naming the offending line.

IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const IntMatrix& m);

}  // namespace polyspace
