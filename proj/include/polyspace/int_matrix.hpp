#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "polyspace/bigint.hpp"

namespace polyspace {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Elementary divisors d_1 | d_2 | ... | d_r, then zeros, min(rows, cols)
/// entries in total. All entries are nonnegative.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

/// Integral-similarity class of an involution: P ~ F(x, y, z).
struct InvolutionClass {
  BigInt x;  // (0 1; 1 0) blocks
  BigInt y;  // (+1) entries
  BigInt z;  // (-1) entries

  friend bool operator==(const InvolutionClass&, const InvolutionClass&) = default;
};

/// Block diagonal: x swap blocks, then y entries +1, then z entries -1.
IntMatrix involution_normal_form(std::size_t x, std::size_t y, std::size_t z);

/// Reads (x, y, z) off the elementary divisors of I - P: there are x ones,
/// x + y zeros and z twos. Throws Error{NotSquare}, Error{NotInvolution}
/// when P^2 != I, and Error{UnexpectedDivisor} if a divisor other than
/// 0, 1, 2 shows up or the counts are inconsistent.
InvolutionClass classify_involution(const IntMatrix& p);

struct UnimodularPair {
  IntMatrix matrix;
  IntMatrix inverse;
};

/// Deterministic in `seed`: a product of row swaps, sign flips and shears
/// with multipliers in [-2, 2], at most 2 * size shears. The inverse is
/// accumulated by replaying the inverse operations.
UnimodularPair random_unimodular_pair(std::size_t size, std::uint64_t seed);
IntMatrix random_unimodular(std::size_t size, std::uint64_t seed);

}  // namespace polyspace
