#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyspace/bigint.hpp"

namespace polyspace {

/// C(n, k) exactly; zero outside 0 <= k <= n.
BigInt binom(std::int64_t n, std::int64_t k);

/// Counting invariants attached to an odd n = 2m + 1 >= 5.
///
///   D     = C(n-1, m-1)                         rank of H_{m-1}(M_n) is 2D
///   alpha = sum_{i<m} 2^{m-1-i} C(2i, i)         swap blocks of tau_*
///   beta  = D - alpha                            (+1, -1) block pairs
///   gamma = sum_{i<=m-2} C(n-1, i)
///   d     = sum_i (-1)^i C(2m, m-1-2i)           Euler characteristic count
struct InvariantTable {
  int n = 0;
  int m = 0;
  BigInt D;
  BigInt alpha;
  BigInt beta;
  BigInt gamma;
  BigInt d;

  friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
};

/// Throws Error{InvalidArgument} unless n is odd and n >= 5.
InvariantTable invariant_table(int n);

/// sum_{i=0}^{m-1} 2^{m-1-i} C(2i, i). Defined for m >= 1 (m = 1 is n = 3).
BigInt alpha_closed_form(int m);

/// sum_{k=0}^{m} C(2m, k) sin((m-k) pi / 2), with the sine replaced by its
/// exact value 0, 1, 0, -1 for (m-k) mod 4 = 0, 1, 2, 3.
BigInt sine_sum(int m);

/// First `count` coefficients of 1 / ((1 - 2x) sqrt(1 - 4x)), i.e. the
/// convolution of (2^k) with the central binomials C(2k, k).
/// Coefficient i equals alpha for n = 2i + 3.
std::vector<BigInt> alpha_series(std::size_t count);

/// Throws Error{InvalidArgument} unless n is odd and n >= 5; returns m.
int half_of_odd(int n);

}  // namespace polyspace
