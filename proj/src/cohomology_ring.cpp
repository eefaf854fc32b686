#include "polyspace/cohomology_ring.hpp"

#include <algorithm>
#include <string>

#include "polyspace/combinatorics.hpp"
#include "polyspace/error.hpp"

namespace polyspace::ring {

void Gf2Poly::add(const Monomial& m) {
  if (auto [it, inserted] = terms_.insert(m); !inserted) terms_.erase(it);
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  for (const auto& t : other.terms_) add(t);
  return *this;
}

bool Gf2Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Monomial& t) { return t.degree() == d; });
}

Presentation::Presentation(int n) : n_(n), m_(half_of_odd(n)), v_(static_cast<unsigned>(n - 1)) {
  if (v_ > kMaxUniverse) throw Error(ErrorKind::InvalidArgument, "n too large for subset masks");
  size_offset_.assign(static_cast<std::size_t>(m_) + 1, 0);
  for (int k = 0; k < m_; ++k)
    size_offset_[k + 1] = size_offset_[k] + static_cast<std::size_t>(binom(v_, k));
}

std::optional<Monomial> Presentation::multiply(const Monomial& a, const Monomial& b) const {
  const Mask s = a.vset | b.vset;
  if (std::popcount(s) >= m_) return std::nullopt;
  return Monomial{a.r_exp + b.r_exp + static_cast<unsigned>(std::popcount(a.vset & b.vset)), s};
}

Gf2Poly Presentation::multiply(const Gf2Poly& a, const Gf2Poly& b) const {
  Gf2Poly out;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      if (auto p = multiply(x, y)) out.add(*p);
  return out;
}

Gf2Poly Presentation::normalize(std::span<const Generator> factors) const {
  std::optional<Monomial> acc = Monomial{};
  for (const auto& g : factors) {
    if (g.kind == Generator::Kind::R) {
      if (acc) ++acc->r_exp;
      continue;
    }
    if (g.index < 1 || g.index > v_)
      throw Error(ErrorKind::InvalidArgument, "generator V_" + std::to_string(g.index) + " out of range");
    if (acc) acc = multiply(*acc, Monomial{0, Mask{1} << (g.index - 1)});
  }
  return acc ? Gf2Poly(*acc) : Gf2Poly();
}

std::vector<Monomial> Presentation::monomial_basis(int q) const {
  std::vector<Monomial> out;
  if (q < 0) return out;
  out.reserve(basis_size(q));
  for (int k = 0; k <= std::min(q, m_ - 1); ++k)
    for (Mask s : k_subsets(v_, static_cast<unsigned>(k)))
      out.push_back({static_cast<unsigned>(q - k), s});
  return out;
}

std::size_t Presentation::basis_size(int q) const {
  if (q < 0) return 0;
  return size_offset_[static_cast<std::size_t>(std::min(q, m_ - 1)) + 1];
}

std::optional<std::size_t> Presentation::coordinate(const Monomial& mono) const {
  const auto k = static_cast<std::size_t>(std::popcount(mono.vset));
  if (k >= static_cast<std::size_t>(m_) || (mono.vset >> v_) != 0) return std::nullopt;
  return size_offset_[k] + colex_rank(mono.vset);
}

gf2::BitVector Presentation::coordinates(const Gf2Poly& p, int q) const {
  gf2::BitVector out(basis_size(q));
  for (const auto& t : p.terms()) {
    if (static_cast<int>(t.degree()) != q)
      throw Error(ErrorKind::DimensionMismatch, "polynomial term has degree " +
                                                    std::to_string(t.degree()) + ", expected " +
                                                    std::to_string(q));
    out.flip(*coordinate(t));
  }
  return out;
}

Gf2Poly Presentation::relation_generator(Mask subset) const {
  const int size = std::popcount(subset);
  if (size < m_ + 1 || (subset >> v_) != 0)
    throw Error(ErrorKind::InvalidArgument, "relation subset must have at least m+1 elements of 1..n-1");
  Gf2Poly g;
  for (Mask s = subset;; s = (s - 1) & subset) {
    const int k = std::popcount(s);
    if (k <= m_ - 1) g.add({static_cast<unsigned>(size - k - 1), s});
    if (s == 0) break;
  }
  return g;
}

gf2::Matrix Presentation::relation_space(int q) const {
  gf2::Matrix rows(0, basis_size(q));
  for (int len = m_ + 1; len <= std::min(q + 1, static_cast<int>(v_)); ++len) {
    const auto multipliers = monomial_basis(q - len + 1);
    for (Mask l : k_subsets(v_, static_cast<unsigned>(len))) {
      const Gf2Poly g = relation_generator(l);
      for (const auto& mono : multipliers)
        rows.append_row(coordinates(multiply(Gf2Poly(mono), g), q));
    }
  }
  return rows;
}

std::vector<gf2::Matrix> Presentation::ideal_slices(int max_q) const {
  std::vector<gf2::Matrix> slices;
  std::vector<Monomial> factors{{1, 0}};
  for (unsigned i = 0; i < v_; ++i) factors.push_back({0, Mask{1} << i});

  for (int q = 0; q <= max_q; ++q) {
    gf2::Echelon ech(basis_size(q));
    if (q > 0 && slices.back().rows() > 0) {
      // target[f][j]: coordinate of factor f times the j-th monomial of degree q-1.
      const auto prev_basis = monomial_basis(q - 1);
      std::vector<std::vector<std::int64_t>> target(factors.size(),
                                                    std::vector<std::int64_t>(prev_basis.size(), -1));
      for (std::size_t f = 0; f < factors.size(); ++f)
        for (std::size_t j = 0; j < prev_basis.size(); ++j)
          if (auto p = multiply(factors[f], prev_basis[j]))
            target[f][j] = static_cast<std::int64_t>(*coordinate(*p));

      const gf2::Matrix& prev = slices.back();
      for (std::size_t r = 0; r < prev.rows(); ++r) {
        const auto support = prev.row_vector(r).support();
        for (std::size_t f = 0; f < factors.size(); ++f) {
          gf2::BitVector product(basis_size(q));
          for (std::size_t j : support)
            if (target[f][j] >= 0) product.flip(static_cast<std::size_t>(target[f][j]));
          ech.insert(product);
        }
      }
    }
    if (q + 1 >= m_ + 1 && q + 1 <= static_cast<int>(v_))
      for (Mask l : k_subsets(v_, static_cast<unsigned>(q + 1)))
        ech.insert(coordinates(relation_generator(l), q));
    slices.push_back(ech.basis());
  }
  return slices;
}

std::vector<std::size_t> Presentation::quotient_dims(int max_q) const {
  const auto slices = ideal_slices(max_q);
  std::vector<std::size_t> dims;
  for (int q = 0; q <= max_q; ++q) dims.push_back(basis_size(q) - slices[q].rows());
  return dims;
}

std::size_t Presentation::cohomology_dim(int q) const {
  if (q < 0 || q > n_ - 3) return 0;
  return quotient_dims(q)[q];
}

std::size_t Presentation::r2_cup_rank_from(int q, const std::vector<gf2::Matrix>& slices) const {
  gf2::Matrix images(0, basis_size(q + 2));
  for (const auto& mono : monomial_basis(q)) {
    gf2::BitVector row(basis_size(q + 2));
    row.set(*coordinate({mono.r_exp + 2, mono.vset}));
    images.append_row(row);
  }
  return gf2::induced_quotient_rank(images, slices[q + 2]);
}

std::size_t Presentation::r2_cup_rank(int q) const {
  if (q < 0) throw Error(ErrorKind::InvalidArgument, "cup rank needs q >= 0");
  if (q + 2 > n_ - 3) return 0;
  return r2_cup_rank_from(q, ideal_slices(q + 2));
}

std::vector<std::size_t> Presentation::r2_cup_ranks() const {
  const auto slices = ideal_slices(n_ - 3);
  std::vector<std::size_t> out;
  for (int q = 0; q <= n_ - 3; ++q) out.push_back(q + 2 > n_ - 3 ? 0 : r2_cup_rank_from(q, slices));
  return out;
}

RelationKernelReport Presentation::relation_kernel_check() const {
  const auto ls = k_subsets(v_, static_cast<unsigned>(m_ + 1));
  const std::size_t dim_y = size_offset_[m_ - 1];

  // p_i collects the |S| = m-1 terms of the (R3) relation for L_i (each is
  // R * V_S); f_i collects the |S| <= m-2 terms.
  gf2::Matrix p_coeffs(static_cast<std::size_t>(binom(v_, m_ - 1)), ls.size());
  std::vector<gf2::BitVector> f(ls.size(), gf2::BitVector(dim_y));
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const Gf2Poly g = relation_generator(ls[i]);
    for (const auto& t : g.terms()) {
      const auto k = std::popcount(t.vset);
      if (k == m_ - 1)
        p_coeffs.set(colex_rank(t.vset), i);
      else
        f[i].flip(*coordinate(t));
    }
  }

  RelationKernelReport res;
  const auto omega = gf2::kernel_basis(p_coeffs);
  res.dim_X = omega.size();
  res.dim_Y = dim_y;

  const BoundaryKernel complex_kernel = boundary_kernel(n_);
  const gf2::Matrix boundary = boundary_matrix(v_, static_cast<unsigned>(m_ + 1));
  res.kernel_matches_complex =
      complex_kernel.dim == omega.size() &&
      std::all_of(omega.begin(), omega.end(), [&](const auto& x) { return gf2::apply(boundary, x).none(); }) &&
      std::all_of(complex_kernel.basis.begin(), complex_kernel.basis.end(),
                  [&](const auto& x) { return gf2::apply(p_coeffs, x).none(); });

  gf2::Echelon z(dim_y);
  for (const auto& xi : omega) {
    gf2::BitVector fxi(dim_y);
    for (std::size_t i : xi.support()) fxi ^= f[i];
    z.insert(fxi);
  }
  res.dim_Z = z.rank();
  res.f_independent = res.dim_Z == omega.size();
  return res;
}

Gf2Poly normalize(int n, std::span<const Generator> factors) { return Presentation(n).normalize(factors); }
std::vector<Monomial> monomial_basis(int n, int q) { return Presentation(n).monomial_basis(q); }
gf2::Matrix relation_space(int n, int q) { return Presentation(n).relation_space(q); }
std::size_t cohomology_dim(int n, int q) { return Presentation(n).cohomology_dim(q); }
std::size_t r2_cup_rank(int n, int q) { return Presentation(n).r2_cup_rank(q); }
RelationKernelReport relation_kernel_check(int n) { return Presentation(n).relation_kernel_check(); }

}  // namespace polyspace::ring
