#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyspace {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Narrowing conversion that refuses to truncate.
std::uint64_t to_u64(const BigInt& x);

}  // namespace polyspace
