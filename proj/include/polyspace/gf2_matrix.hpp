#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polyspace::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length vector over GF(2). Bit j lives at bit (j % 64) of word j / 64;
/// bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}
  BitVector(std::size_t size, std::span<const Word> words);

  std::size_t size() const { return size_; }
  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t j) const { return (words_[j / kWordBits] >> (j % kWordBits)) & 1U; }
  void set(std::size_t j, bool value = true);
  void flip(std::size_t j) { words_[j / kWordBits] ^= Word{1} << (j % kWordBits); }

  bool none() const;
  std::size_t count() const;
  std::vector<std::size_t> support() const;

  BitVector& operator^=(const BitVector& other);
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::string to_string() const;  // "0110..." with column 0 first

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Dense row-major matrix over GF(2); each row occupies words_per_row()
/// consecutive words of one contiguous buffer.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<BitVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }

  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);

  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  BitVector row_vector(std::size_t r) const { return BitVector(cols_, row(r)); }

  /// Appends a row; `words` must have words_per_row() entries and respect the
  /// zero-padding invariant.
  void append_row(std::span<const Word> words);
  void append_row(const BitVector& v) { append_row(v.words()); }

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Matrix product over GF(2). Throws Error{DimensionMismatch}.
Matrix multiply(const Matrix& a, const Matrix& b);

/// M x for a column vector x of length cols.
BitVector apply(const Matrix& m, const BitVector& x);

/// Incremental row echelon basis. Each stored row is keyed by its lowest set
/// bit and has no bits below it, so reducing a vector only XORs it with rows
/// whose pivots it currently contains.
class Echelon {
 public:
  explicit Echelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivot_cols_.size(); }

  /// Reduces `words` in place until its lowest set bit is not a pivot (or it
  /// is zero). Returns true iff the vector lies in the span.
  bool reduce(std::span<Word> words) const;

  /// Adds a vector to the span; returns true if the rank grew.
  bool insert(std::span<const Word> words);
  bool insert(const BitVector& v) { return insert(v.words()); }

  /// Pivot columns in insertion order.
  const std::vector<std::size_t>& pivots() const { return pivot_cols_; }

  /// Basis rows, one per pivot, in insertion order.
  Matrix basis() const;

  /// Reduced row echelon rows (each pivot column appears in exactly one row),
  /// ordered by increasing pivot column.
  Matrix reduced_basis() const;

 private:
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::int64_t> slot_of_col_;  // -1 when the column is not a pivot
  std::vector<std::size_t> pivot_cols_;
  std::vector<Word> rows_;  // slot i occupies words [i * stride_, (i + 1) * stride_)
};

std::size_t rank(const Matrix& m);

/// Basis of the right kernel {x : M x = 0}; one vector per free column.
std::vector<BitVector> kernel_basis(const Matrix& m);

/// dim((rowspan(images) + rowspan(relations)) / rowspan(relations)).
std::size_t induced_quotient_rank(const Matrix& images, const Matrix& relations);

}  // namespace polyspace::gf2
