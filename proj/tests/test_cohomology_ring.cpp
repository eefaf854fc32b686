#include <doctest.h>

#include <vector>

#include "polyspace/cohomology_ring.hpp"
#include "polyspace/combinatorics.hpp"
#include "polyspace/error.hpp"
#include "polyspace/invariants.hpp"

using namespace polyspace;
using namespace polyspace::ring;

namespace {

Mask set_of(std::initializer_list<unsigned> elems) {
  Mask m = 0;
  for (unsigned e : elems) m |= Mask{1} << (e - 1);
  return m;
}

bool same_row_space(const gf2::Matrix& a, const gf2::Matrix& b) {
  if (a.cols() != b.cols()) return false;
  gf2::Echelon ea(a.cols()), eb(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) ea.insert(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) eb.insert(b.row(r));
  if (ea.rank() != eb.rank()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<gf2::Word> w(a.row(r).begin(), a.row(r).end());
    if (!eb.reduce(w)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("normal form of generator words") {
  const Presentation p(9);  // m = 4
  using G = Generator;
  const std::vector<G> vv{G::V(1), G::V(1)};
  CHECK(p.normalize(vv) == Gf2Poly(Monomial{1, set_of({1})}));
  const std::vector<G> word{G::V(3), G::R(), G::V(1), G::V(3), G::R()};
  CHECK(p.normalize(word) == Gf2Poly(Monomial{3, set_of({1, 3})}));
  const std::vector<G> four{G::V(1), G::V(2), G::V(3), G::V(4)};
  CHECK(p.normalize(four).is_zero());
  const std::vector<G> three{G::V(1), G::V(2), G::V(3), G::V(2)};
  CHECK(p.normalize(three) == Gf2Poly(Monomial{1, set_of({1, 2, 3})}));
  CHECK(p.normalize(std::vector<G>{}) == Gf2Poly(Monomial{}));
  const std::vector<G> bad{G::V(9)};
  CHECK_THROWS_AS(p.normalize(bad), Error);
}

TEST_CASE("polynomial arithmetic is mod 2") {
  Gf2Poly a(Monomial{1, 0});
  a += Gf2Poly(Monomial{1, 0});
  CHECK(a.is_zero());
  Gf2Poly b(Monomial{2, 0});
  b.add(Monomial{1, set_of({2})});
  CHECK(b.is_homogeneous());
  b.add(Monomial{0, set_of({2})});
  CHECK_FALSE(b.is_homogeneous());

  const Presentation p(7);
  // (R + V1)(R + V1) = R^2 + V1^2 = R^2 + R V1.
  Gf2Poly x(Monomial{1, 0});
  x.add(Monomial{0, set_of({1})});
  Gf2Poly expect(Monomial{2, 0});
  expect.add(Monomial{1, set_of({1})});
  CHECK(p.multiply(x, x) == expect);
}

TEST_CASE("monomial basis sizes and coordinates") {
  for (int n = 5; n <= 13; n += 2) {
    const Presentation p(n);
    for (int q = 0; q <= n - 2; ++q) {
      BigInt expected = 0;
      for (int k = 0; k <= std::min(q, p.m() - 1); ++k) expected += binom(n - 1, k);
      const auto basis = p.monomial_basis(q);
      CHECK(BigInt(basis.size()) == expected);
      CHECK(basis.size() == p.basis_size(q));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].degree() == static_cast<unsigned>(q));
        CHECK(p.coordinate(basis[i]) == i);
      }
    }
    CHECK(p.monomial_basis(-1).empty());
  }
}

TEST_CASE("relation generator") {
  const Presentation p(7);  // m = 3, relations need |L| >= 4
  CHECK_THROWS_AS(p.relation_generator(set_of({1, 2, 3})), Error);
  CHECK_THROWS_AS(p.relation_generator(set_of({1, 2, 3, 7})), Error);
  const auto g = p.relation_generator(set_of({1, 2, 3, 4}));
  CHECK(g.is_homogeneous());
  // Terms R^{3-|S|} V_S for |S| <= 2: 1 + 4 + 6 of them.
  CHECK(g.terms().size() == 11);
  CHECK(g.terms().begin()->degree() == 3);
}

TEST_CASE("literal relation space and incremental ideal slices agree") {
  for (int n = 5; n <= 11; n += 2) {
    const Presentation p(n);
    const auto slices = p.ideal_slices(n - 2);
    for (int q = 0; q <= n - 2; ++q) {
      CAPTURE(n);
      CAPTURE(q);
      CHECK(same_row_space(p.relation_space(q), slices[static_cast<std::size_t>(q)]));
    }
  }
}

TEST_CASE("quotient dimensions") {
  const std::vector<std::vector<std::size_t>> frozen{
      {1, 5, 1, 0}, {1, 7, 22, 7, 1, 0}, {1, 9, 37, 93, 37, 9, 1, 0}};
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    const int n = 5 + 2 * static_cast<int>(i);
    CHECK(Presentation(n).quotient_dims(n - 2) == frozen[i]);
  }
  for (int n = 5; n <= 13; n += 2) {
    CAPTURE(n);
    const Presentation p(n);
    const auto dims = p.quotient_dims(n - 2);
    const auto closed = series_bundle(n).ps_Z2_Mbar;
    CHECK(dims.back() == 0);
    for (int q = 0; q <= n - 3; ++q) CHECK(BigInt(dims[static_cast<std::size_t>(q)]) == closed[q]);
    CHECK(p.cohomology_dim(-1) == 0);
    CHECK(p.cohomology_dim(n - 2) == 0);
    CHECK(p.cohomology_dim(n - 3) == 1);
  }
  CHECK(cohomology_dim(7, 2) == 22);
}

TEST_CASE("cup with R^2") {
  const std::vector<std::vector<std::size_t>> frozen{{1, 0, 0}, {1, 6, 1, 0, 0}, {1, 9, 29, 9, 1, 0, 0}};
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    const int n = 5 + 2 * static_cast<int>(i);
    CHECK(Presentation(n).r2_cup_ranks() == frozen[i]);
  }
  for (int n = 5; n <= 11; n += 2) {
    const Presentation p(n);
    const auto ranks = p.r2_cup_ranks();
    const auto t = invariant_table(n);
    for (int q = 0; q <= n - 3; ++q) {
      CAPTURE(n);
      CAPTURE(q);
      CHECK(BigInt(ranks[static_cast<std::size_t>(q)]) == r2_cup_rank_closed_form(n, q));
      CHECK(p.r2_cup_rank(q) == ranks[static_cast<std::size_t>(q)]);
    }
    CHECK(BigInt(ranks[static_cast<std::size_t>(t.m - 2)]) == t.gamma - t.beta);
  }
  CHECK_THROWS_AS(r2_cup_rank(7, -1), Error);
  CHECK(r2_cup_rank(7, 10) == 0);
}

TEST_CASE("relation kernel report") {
  for (int n = 5; n <= 13; n += 2) {
    CAPTURE(n);
    const auto r = relation_kernel_check(n);
    const auto t = invariant_table(n);
    CHECK(BigInt(r.dim_X) == t.beta);
    CHECK(r.kernel_matches_complex);
    CHECK(r.f_independent);
    CHECK(r.dim_Z == r.dim_X);
    CHECK(BigInt(r.dim_Y) == t.gamma);
  }
}
