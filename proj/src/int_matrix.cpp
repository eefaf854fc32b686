#include "polyspace/int_matrix.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "polyspace/error.hpp"

namespace polyspace {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "shapes differ in subtraction");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Entry of smallest absolute value among the nonzero entries of the trailing
// block starting at (t, t); returns false if the block is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      BigInt v = abs(a(i, j));
      if (!found || v < best) {
        best = std::move(v);
        pr = i;
        pc = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// Clears row t and column t outside the pivot by integer division with
// remainder; when a remainder survives, the smaller entry becomes the new
// pivot and the sweep repeats.
void clear_cross(IntMatrix& a, std::size_t t) {
  for (;;) {
    std::vector<std::size_t> row_nz;
    for (std::size_t j = t; j < a.cols(); ++j)
      if (a(t, j) != 0) row_nz.push_back(j);
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a(i, t) == 0) continue;
      const BigInt q = a(i, t) / a(t, t);
      for (std::size_t j : row_nz) a(i, j) -= q * a(t, j);
    }

    std::vector<std::size_t> col_nz;
    for (std::size_t i = t; i < a.rows(); ++i)
      if (a(i, t) != 0) col_nz.push_back(i);
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a(t, j) == 0) continue;
      const BigInt q = a(t, j) / a(t, t);
      for (std::size_t i : col_nz) a(i, j) -= q * a(i, t);
    }

    std::size_t best_r = t;
    std::size_t best_c = t;
    BigInt best = abs(a(t, t));
    for (std::size_t i = t + 1; i < a.rows(); ++i)
      if (a(i, t) != 0 && abs(a(i, t)) < best) {
        best = abs(a(i, t));
        best_r = i;
        best_c = t;
      }
    for (std::size_t j = t + 1; j < a.cols(); ++j)
      if (a(t, j) != 0 && abs(a(t, j)) < best) {
        best = abs(a(t, j));
        best_r = t;
        best_c = j;
      }

    bool clean = true;
    for (std::size_t i = t + 1; i < a.rows() && clean; ++i) clean = a(i, t) == 0;
    for (std::size_t j = t + 1; j < a.cols() && clean; ++j) clean = a(t, j) == 0;
    if (clean) return;
    swap_rows(a, t, best_r);
    swap_cols(a, t, best_c);
  }
}

}  // namespace

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t r = std::min(a.rows(), a.cols());
  std::vector<BigInt> d;
  d.reserve(r);
  for (std::size_t t = 0; t < r; ++t) {
    std::size_t pr = 0;
    std::size_t pc = 0;
    if (!find_pivot(a, t, pr, pc)) break;
    swap_rows(a, t, pr);
    swap_cols(a, t, pc);
    clear_cross(a, t);
    d.push_back(abs(a(t, t)));
  }
  d.resize(r, 0);

  // A diagonal matrix diag(a, b) is equivalent to diag(gcd, lcm); sweeping
  // pairs yields the divisibility chain and pushes zeros to the end.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (d[i] == 0 && d[j] == 0) continue;
      const BigInt g = gcd(d[i], d[j]);
      const BigInt l = (d[i] == 0 || d[j] == 0) ? BigInt(0) : d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

IntMatrix involution_normal_form(std::size_t x, std::size_t y, std::size_t z) {
  IntMatrix f(2 * x + y + z, 2 * x + y + z);
  std::size_t at = 0;
  for (std::size_t i = 0; i < x; ++i, at += 2) {
    f(at, at + 1) = 1;
    f(at + 1, at) = 1;
  }
  for (std::size_t i = 0; i < y; ++i, ++at) f(at, at) = 1;
  for (std::size_t i = 0; i < z; ++i, ++at) f(at, at) = -1;
  return f;
}

InvolutionClass classify_involution(const IntMatrix& p) {
  if (!p.is_square())
    throw Error(ErrorKind::NotSquare, "involution must be square, got " + std::to_string(p.rows()) +
                                          "x" + std::to_string(p.cols()));
  const IntMatrix id = IntMatrix::identity(p.rows());
  if (!(p * p == id)) throw Error(ErrorKind::NotInvolution, "P * P is not the identity");

  BigInt zeros = 0;
  BigInt ones = 0;
  BigInt twos = 0;
  for (const auto& d : smith_normal_form(id - p)) {
    if (d == 0)
      ++zeros;
    else if (d == 1)
      ++ones;
    else if (d == 2)
      ++twos;
    else
      throw Error(ErrorKind::UnexpectedDivisor, "elementary divisor " + d.str() + " of I - P");
  }
  if (zeros < ones)
    throw Error(ErrorKind::UnexpectedDivisor, "fewer zero divisors than unit divisors");
  return {ones, zeros - ones, twos};
}

UnimodularPair random_unimodular_pair(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Reduce raw engine output directly; std distributions differ across
  // standard libraries and would break seed determinism.
  auto below = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  UnimodularPair out{IntMatrix::identity(size), IntMatrix::identity(size)};
  IntMatrix& s = out.matrix;
  IntMatrix& inv = out.inverse;

  for (std::size_t i = size; i-- > 1;) {
    const std::size_t j = below(i + 1);
    swap_rows(s, i, j);
    swap_cols(inv, i, j);
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (rng() & 1U) {
      for (std::size_t c = 0; c < size; ++c) s(i, c) = -s(i, c);
      for (std::size_t r = 0; r < size; ++r) inv(r, i) = -inv(r, i);
    }
  }
  if (size < 2) return out;

  static constexpr long kMultipliers[] = {-2, -1, 1, 2};
  const std::size_t shears = 1 + below(2 * size);
  for (std::size_t k = 0; k < shears; ++k) {
    const std::size_t i = below(size);
    std::size_t j = below(size - 1);
    if (j >= i) ++j;
    const long c = kMultipliers[below(4)];
    // S <- (I + c e_ij) S and S^-1 <- S^-1 (I - c e_ij).
    for (std::size_t col = 0; col < size; ++col) s(i, col) += c * s(j, col);
    for (std::size_t row = 0; row < size; ++row) inv(row, j) -= c * inv(row, i);
  }
  return out;
}

IntMatrix random_unimodular(std::size_t size, std::uint64_t seed) {
  return random_unimodular_pair(size, seed).matrix;
}

}  // namespace polyspace
