#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyspace {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  NotSquare,
  NotInvolution,
  UnexpectedDivisor,
  Inconsistent,
  NegativeCoefficient,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` carries the category
/// that the CLI and the Python layer map to exit codes / exception names.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polyspace
