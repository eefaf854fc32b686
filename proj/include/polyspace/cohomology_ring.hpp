#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "polyspace/gf2_matrix.hpp"
#include "polyspace/subset_complex.hpp"

namespace polyspace::ring {

/// R^r_exp * prod_{i in vset} V_i, already reduced by V_i^2 = R V_i.
/// Monomials with |vset| >= m vanish and are never constructed.
struct Monomial {
  unsigned r_exp = 0;
  Mask vset = 0;

  unsigned degree() const { return r_exp + static_cast<unsigned>(std::popcount(vset)); }
  auto operator<=>(const Monomial&) const = default;
};

/// Polynomial over GF(2): a set of monomials, addition is symmetric difference.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(Monomial m) { terms_.insert(m); }

  void add(const Monomial& m);
  Gf2Poly& operator+=(const Gf2Poly& other);

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  const std::set<Monomial>& terms() const { return terms_; }

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  std::set<Monomial> terms_;
};

struct Generator {
  enum class Kind { R, V } kind = Kind::R;
  unsigned index = 0;  // 1..n-1 for V

  static Generator R() { return {Kind::R, 0}; }
  static Generator V(unsigned i) { return {Kind::V, i}; }
};

struct RelationKernelReport {
  std::size_t dim_X = 0;        // dim of the kernel of the p-coefficient matrix
  bool f_independent = false;   // the low-order parts of the kernel combinations are independent
  bool kernel_matches_complex = false;  // same subspace as boundary_kernel(n)
  std::size_t dim_Y = 0;        // monomials R^{m-k} V_S with k <= m-2
  std::size_t dim_Z = 0;        // rank of those low-order parts
};

/// Z2[R, V_1..V_{n-1}] modulo
///   (R1) V_i^2 + R V_i,
///   (R2) prod_{i in S} V_i for |S| >= m,
///   (R3) sum_{S ⊆ L} R^{|L-S|-1} prod_{i in S} V_i for |L| >= m+1,
/// for odd n = 2m + 1 >= 5. (R1) and (R2) are built into Monomial; (R3)
/// is handled by linear algebra one degree at a time.
///
/// Degree-q coordinates: monomial R^{q-k} V_S sits at
///   sum_{j<k} C(n-1, j) + colex_rank(S),   0 <= k <= min(q, m-1).
class Presentation {
 public:
  explicit Presentation(int n);

  int n() const { return n_; }
  int m() const { return m_; }
  unsigned v() const { return v_; }

  std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) const;
  Gf2Poly multiply(const Gf2Poly& a, const Gf2Poly& b) const;
  Gf2Poly normalize(std::span<const Generator> factors) const;

  std::vector<Monomial> monomial_basis(int q) const;
  std::size_t basis_size(int q) const;
  std::optional<std::size_t> coordinate(const Monomial& mono) const;
  gf2::BitVector coordinates(const Gf2Poly& p, int q) const;

  /// The (R3) generator for L, |L| >= m + 1, with (R2)-killed terms dropped.
  Gf2Poly relation_generator(Mask subset) const;

  /// Every product M * g_L of degree q, one row per (L, M), in basis(q)
  /// coordinates. Row count grows quickly with n.
  gf2::Matrix relation_space(int q) const;

  /// Echelon bases of the ideal slices in degrees 0..max_q, built as
  /// I_q = R I_{q-1} + sum_i V_i I_{q-1} + span{g_L : |L| = q+1}.
  /// Same row space as relation_space(q) with far fewer rows.
  std::vector<gf2::Matrix> ideal_slices(int max_q) const;

  /// dim basis(q) - rank(I_q) for every q in 0..max_q, without clamping.
  std::vector<std::size_t> quotient_dims(int max_q) const;

  /// dim H^q; zero outside 0 <= q <= n - 3.
  std::size_t cohomology_dim(int q) const;

  /// Rank of cup with R^2 from degree q to q + 2; zero when q + 2 > n - 3.
  /// Throws Error{InvalidArgument} for q < 0.
  std::size_t r2_cup_rank(int q) const;

  /// r2_cup_rank(q) for q = 0 .. n - 3 from one pass over the ideal slices.
  std::vector<std::size_t> r2_cup_ranks() const;

  RelationKernelReport relation_kernel_check() const;

 private:
  std::size_t r2_cup_rank_from(int q, const std::vector<gf2::Matrix>& slices) const;

  int n_;
  int m_;
  unsigned v_;
  std::vector<std::size_t> size_offset_;  // size_offset_[k] = sum_{j<k} C(v, j)
};

Gf2Poly normalize(int n, std::span<const Generator> factors);
std::vector<Monomial> monomial_basis(int n, int q);
gf2::Matrix relation_space(int n, int q);
std::size_t cohomology_dim(int n, int q);
std::size_t r2_cup_rank(int n, int q);
RelationKernelReport relation_kernel_check(int n);

}  // namespace polyspace::ring
