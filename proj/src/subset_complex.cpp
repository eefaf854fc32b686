#include "polyspace/subset_complex.hpp"

#include <array>
#include <string>

#include "polyspace/combinatorics.hpp"
#include "polyspace/error.hpp"

namespace polyspace {

namespace {

// Small binomials for colex ranking; C(63, 31) still fits in 64 bits.
const std::array<std::array<std::uint64_t, 64>, 64>& small_binomials() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 64>, 64> t{};
    for (std::size_t n = 0; n < 64; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

void check_universe(unsigned v) {
  if (v > kMaxUniverse)
    throw Error(ErrorKind::InvalidArgument,
                "universe size " + std::to_string(v) + " exceeds " + std::to_string(kMaxUniverse));
}

std::size_t count_subsets(unsigned v, unsigned k) {
  return k > v ? 0 : static_cast<std::size_t>(small_binomials()[v][k]);
}

}  // namespace

std::vector<Mask> k_subsets(unsigned v, unsigned k) {
  check_universe(v);
  std::vector<Mask> out;
  if (k > v) return out;
  out.reserve(count_subsets(v, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const Mask limit = Mask{1} << v;
  // Gosper's hack walks same-popcount masks in increasing order.
  for (Mask x = (Mask{1} << k) - 1; x < limit;) {
    out.push_back(x);
    const Mask low = x & (~x + 1);
    const Mask ripple = x + low;
    x = (((ripple ^ x) >> 2) / low) | ripple;
  }
  return out;
}

std::size_t colex_rank(Mask mask) {
  const auto& c = small_binomials();
  std::size_t rank = 0;
  std::size_t i = 1;
  for (Mask m = mask; m != 0; m &= m - 1, ++i)
    rank += static_cast<std::size_t>(c[static_cast<std::size_t>(std::countr_zero(m))][i]);
  return rank;
}

gf2::Matrix boundary_matrix(unsigned v, unsigned k) {
  check_universe(v);
  if (k < 2 || k > v)
    throw Error(ErrorKind::InvalidArgument,
                "boundary degree must satisfy 2 <= k <= v, got k=" + std::to_string(k) +
                    " v=" + std::to_string(v));
  const auto cols = k_subsets(v, k);
  gf2::Matrix d(count_subsets(v, k - 2), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Mask delta = cols[j];
    for (Mask a = delta; a != 0; a &= a - 1) {
      const Mask bit_a = a & (~a + 1);
      for (Mask b = a & (a - 1); b != 0; b &= b - 1) {
        const Mask bit_b = b & (~b + 1);
        d.set(colex_rank(delta & ~(bit_a | bit_b)), j);
      }
    }
  }
  return d;
}

ChainComplexReport complex_homology(unsigned v, unsigned top) {
  check_universe(v);
  if (top > v)
    throw Error(ErrorKind::InvalidArgument,
                "top degree " + std::to_string(top) + " exceeds universe size " + std::to_string(v));

  ChainComplexReport report;
  report.v = v;
  report.parity = top % 2 == 0 ? Parity::EvenStart : Parity::OddStart;

  // ranks[q] = rank of ∂_q : C_q -> C_{q-2}, zero for q < 2.
  std::vector<std::size_t> ranks(v + 3, 0);
  std::vector<gf2::Matrix> maps(v + 3);
  const unsigned highest = top + 2 <= v ? top + 2 : top;
  for (unsigned q = top % 2; q <= highest; q += 2) {
    if (q < 2) continue;
    maps[q] = boundary_matrix(v, q);
    ranks[q] = gf2::rank(maps[q]);
  }
  for (unsigned q = top % 2 + 4; q <= highest; q += 2) {
    if (!gf2::multiply(maps[q - 2], maps[q]).is_zero())
      throw std::logic_error("boundary of boundary is nonzero at degree " + std::to_string(q));
  }

  for (int q = static_cast<int>(top); q >= 0; q -= 2) {
    const auto uq = static_cast<unsigned>(q);
    report.degrees.push_back(uq);
    report.homology_dims.push_back(count_subsets(v, uq) - ranks[uq] - ranks[uq + 2]);
  }
  return report;
}

BoundaryKernel boundary_kernel(int n) {
  const int m = half_of_odd(n);
  BoundaryKernel out;
  out.basis = gf2::kernel_basis(boundary_matrix(static_cast<unsigned>(n - 1), static_cast<unsigned>(m + 1)));
  out.dim = out.basis.size();
  return out;
}

gf2::Matrix inclusion_matrix(unsigned v, unsigned s, unsigned t) {
  check_universe(v);
  if (s > v || t > s)
    throw Error(ErrorKind::InvalidArgument,
                "inclusion matrix needs t <= s <= v, got v=" + std::to_string(v) +
                    " s=" + std::to_string(s) + " t=" + std::to_string(t));
  std::vector<std::size_t> offset(t + 2, 0);
  for (unsigned k = 0; k <= t; ++k) offset[k + 1] = offset[k] + count_subsets(v, k);

  const auto cols = k_subsets(v, s);
  gf2::Matrix u(offset[t + 1], cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Mask delta = cols[j];
    // Enumerate every submask of delta and keep those of size <= t.
    for (Mask sub = delta;; sub = (sub - 1) & delta) {
      const auto k = static_cast<unsigned>(std::popcount(sub));
      if (k <= t) u.set(offset[k] + colex_rank(sub), j);
      if (sub == 0) break;
    }
  }
  return u;
}

std::size_t inclusion_rank(unsigned v, unsigned s, unsigned t) {
  return gf2::rank(inclusion_matrix(v, s, t));
}

}  // namespace polyspace
