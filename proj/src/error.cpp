#include "polyspace/error.hpp"

#include <limits>

#include "polyspace/bigint.hpp"

namespace polyspace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::UnexpectedDivisor: return "UnexpectedDivisor";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorKind::InvalidArgument, "value " + x.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(x);
}

}  // namespace polyspace
