#include "polyspace/gf2_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polyspace/error.hpp"

namespace polyspace::gf2 {

namespace {

void xor_into(std::span<Word> dst, std::span<const Word> src, std::size_t from_word) {
  for (std::size_t i = from_word; i < dst.size(); ++i) dst[i] ^= src[i];
}

Word tail_mask(std::size_t bits) {
  const std::size_t rem = bits % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

}  // namespace

BitVector::BitVector(std::size_t size, std::span<const Word> words) : BitVector(size) {
  if (words.size() != words_.size())
    throw Error(ErrorKind::DimensionMismatch, "word count does not match vector length");
  std::copy(words.begin(), words.end(), words_.begin());
  if (!words_.empty()) words_.back() &= tail_mask(size_);
}

void BitVector::set(std::size_t j, bool value) {
  const Word bit = Word{1} << (j % kWordBits);
  if (value)
    words_[j / kWordBits] |= bit;
  else
    words_[j / kWordBits] &= ~bit;
}

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (Word w = words_[wi]; w != 0; w &= w - 1)
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw Error(ErrorKind::DimensionMismatch, "bit vector lengths differ");
  xor_into(words_, other.words_, 0);
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t j = 0; j < size_; ++j)
    if (test(j)) s[j] = '1';
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<BitVector>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from cols");
    m.append_row(r);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * stride_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  if (value)
    w |= bit;
  else
    w &= ~bit;
}

void Matrix::append_row(std::span<const Word> words) {
  if (words.size() != stride_)
    throw Error(ErrorKind::DimensionMismatch, "appended row has the wrong word count");
  data_.insert(data_.end(), words.begin(), words.end());
  if (stride_ != 0) data_.back() &= tail_mask(cols_);
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto src = row(r);
    for (std::size_t wi = 0; wi < stride_; ++wi)
      for (Word w = src[wi]; w != 0; w &= w - 1)
        t.set(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)), r);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ in GF(2) product");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row(r);
    const auto src = a.row(r);
    for (std::size_t wi = 0; wi < src.size(); ++wi)
      for (Word w = src[wi]; w != 0; w &= w - 1)
        xor_into(dst, b.row(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))), 0);
  }
  return out;
}

BitVector apply(const Matrix& m, const BitVector& x) {
  if (x.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from cols");
  BitVector y(m.rows());
  const auto xw = x.words();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto rw = m.row(r);
    Word acc = 0;
    for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & xw[i];
    if (std::popcount(acc) & 1) y.set(r);
  }
  return y;
}

Echelon::Echelon(std::size_t cols)
    : cols_(cols), stride_(words_for(cols)), slot_of_col_(cols, -1) {}

bool Echelon::reduce(std::span<Word> words) const {
  for (std::size_t wi = 0; wi < stride_; ++wi) {
    while (words[wi] != 0) {
      const std::size_t col = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(words[wi]));
      const std::int64_t slot = slot_of_col_[col];
      if (slot < 0) return false;
      xor_into(words, {rows_.data() + static_cast<std::size_t>(slot) * stride_, stride_}, wi);
    }
  }
  return true;
}

bool Echelon::insert(std::span<const Word> words) {
  if (words.size() != stride_)
    throw Error(ErrorKind::DimensionMismatch, "inserted row has the wrong word count");
  std::vector<Word> tmp(words.begin(), words.end());
  if (reduce(tmp)) return false;
  std::size_t wi = 0;
  while (tmp[wi] == 0) ++wi;
  const std::size_t col = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(tmp[wi]));
  slot_of_col_[col] = static_cast<std::int64_t>(pivot_cols_.size());
  pivot_cols_.push_back(col);
  rows_.insert(rows_.end(), tmp.begin(), tmp.end());
  return true;
}

Matrix Echelon::basis() const {
  Matrix m(0, cols_);
  for (std::size_t s = 0; s < rank(); ++s) m.append_row({rows_.data() + s * stride_, stride_});
  return m;
}

Matrix Echelon::reduced_basis() const {
  std::vector<std::size_t> order(rank());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_cols_[a] < pivot_cols_[b]; });

  Matrix m(0, cols_);
  for (std::size_t s : order) m.append_row({rows_.data() + s * stride_, stride_});
  // Row i has its pivot at pivot_cols_[order[i]] and nothing below it; clear
  // each pivot column from every earlier row, highest pivot first.
  for (std::size_t i = m.rows(); i-- > 0;) {
    const std::size_t col = pivot_cols_[order[i]];
    const std::size_t wi = col / kWordBits;
    for (std::size_t j = 0; j < i; ++j)
      if (m.test(j, col)) xor_into(m.row(j), m.row(i), wi);
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    e.insert(m.row(r));
    if (e.rank() == m.cols()) break;
  }
  return e.rank();
}

std::vector<BitVector> kernel_basis(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  const Matrix rref = e.reduced_basis();

  std::vector<std::size_t> pivots = e.pivots();
  std::sort(pivots.begin(), pivots.end());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<BitVector> out;
  out.reserve(m.cols() - pivots.size());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector x(m.cols());
    x.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rref.test(i, f)) x.set(pivots[i]);
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t induced_quotient_rank(const Matrix& images, const Matrix& relations) {
  if (images.cols() != relations.cols())
    throw Error(ErrorKind::DimensionMismatch,
                "images have " + std::to_string(images.cols()) + " columns, relations have " +
                    std::to_string(relations.cols()));
  Echelon e(relations.cols());
  for (std::size_t r = 0; r < relations.rows(); ++r) e.insert(relations.row(r));
  const std::size_t base = e.rank();
  for (std::size_t r = 0; r < images.rows(); ++r) e.insert(images.row(r));
  return e.rank() - base;
}

}  // namespace polyspace::gf2
