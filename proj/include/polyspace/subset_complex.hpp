#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyspace/gf2_matrix.hpp"

namespace polyspace {

/// Subsets of {1, ..., v} as bitmasks: element i is bit i - 1. Universes up
/// to 63 elements fit.
using Mask = std::uint64_t;
inline constexpr unsigned kMaxUniverse = 63;

struct Subset {
  unsigned universe = 0;
  Mask mask = 0;

  unsigned size() const { return static_cast<unsigned>(std::popcount(mask)); }
  bool contains(unsigned element) const { return (mask >> (element - 1)) & 1U; }
  bool operator==(const Subset&) const = default;
};

/// All k-subsets of a v-set in colexicographic order (= increasing mask).
std::vector<Mask> k_subsets(unsigned v, unsigned k);

/// Position of a mask within k_subsets(v, popcount(mask)); independent of v.
std::size_t colex_rank(Mask mask);

/// The map C_k -> C_{k-2} sending a k-subset to the sum of its (k-2)-subsets.
/// Rows: (k-2)-subsets, columns: k-subsets, both colex. Requires 2 <= k <= v.
gf2::Matrix boundary_matrix(unsigned v, unsigned k);

enum class Parity { EvenStart, OddStart };

/// Homology of C_top -> C_{top-2} -> ... -> C_eps -> 0 with eps = top mod 2.
/// ∂_{top+2} is included when top + 2 <= v.
struct ChainComplexReport {
  unsigned v = 0;
  Parity parity = Parity::EvenStart;
  std::vector<unsigned> degrees;           // top, top-2, ..., eps
  std::vector<std::size_t> homology_dims;  // aligned with degrees
};

ChainComplexReport complex_homology(unsigned v, unsigned top);

/// Kernel of ∂_{m+1} on subsets of {1, ..., n-1}, n = 2m + 1. Basis vectors
/// are indexed by the colex order of (m+1)-subsets.
struct BoundaryKernel {
  std::size_t dim = 0;
  std::vector<gf2::BitVector> basis;
};

BoundaryKernel boundary_kernel(int n);

/// Inclusion matrix with one row per subset of size 0..t (size ascending,
/// colex within a size) and one column per s-subset; entry 1 iff row ⊆ column.
gf2::Matrix inclusion_matrix(unsigned v, unsigned s, unsigned t);

std::size_t inclusion_rank(unsigned v, unsigned s, unsigned t);

}  // namespace polyspace
