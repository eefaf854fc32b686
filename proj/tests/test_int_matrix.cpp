#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <vector>

#include "polyspace/error.hpp"
#include "polyspace/int_matrix.hpp"

using namespace polyspace;

namespace {

BigInt laplace_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const BigInt term = a[0][c] * laplace_det(minor);
    det += c % 2 == 0 ? term : BigInt(-term);
  }
  return det;
}

void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of all k x k minors, computed by Laplace expansion.
BigInt minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  choose(m.rows(), k, rows);
  choose(m.cols(), k, cols);
  BigInt g = 0;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rs[i], cs[j]);
      g = boost::multiprecision::gcd(g, laplace_det(sub));
    }
  return abs(g);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

std::vector<std::vector<BigInt>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

}  // namespace

TEST_CASE("smith normal form on a known example") {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(smith_normal_form(a) == std::vector<BigInt>{2, 6, 12});
  CHECK(smith_normal_form(IntMatrix::identity(3)) == std::vector<BigInt>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix(2, 3)) == std::vector<BigInt>{0, 0});
  CHECK(smith_normal_form(IntMatrix(0, 0)).empty());
  CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 5}}) == std::vector<BigInt>{5, 0});
}

TEST_CASE("smith normal form against the minor-gcd oracle") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<int> zero_row(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 9);
    // Force some rank deficiency now and then.
    if (zero_row(rng) == 0 && a.rows() > 1)
      for (std::size_t c = 0; c < a.cols(); ++c) a(a.rows() - 1, c) = 2 * a(0, c);
    const auto d = smith_normal_form(a);
    REQUIRE(d.size() == std::min(a.rows(), a.cols()));
    BigInt product = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      CAPTURE(trial);
      CAPTURE(k);
      CHECK(d[k] >= 0);
      if (k > 0 && d[k - 1] != 0) CHECK(d[k] % d[k - 1] == 0);
      if (k > 0 && d[k - 1] == 0) CHECK(d[k] == 0);
      product *= d[k];
      CHECK(product == minor_gcd(a, k + 1));
    }
  }
}

TEST_CASE("smith normal form keeps large entries exact") {
  const BigInt big = BigInt(1) << 200;
  IntMatrix a(2, 2);
  a(0, 0) = big;
  a(1, 1) = big * 3;
  CHECK(smith_normal_form(a) == std::vector<BigInt>{big, big * 3});
}

TEST_CASE("determinant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix a = random_matrix(rng, n, n, 20);
    CHECK(determinant(a) == laplace_det(rows_of(a)));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), Error);
}

TEST_CASE("random unimodular matrices") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const auto pair = random_unimodular_pair(n, seed);
    CHECK(abs(determinant(pair.matrix)) == 1);
    CHECK(pair.matrix * pair.inverse == IntMatrix::identity(n));
    CHECK(pair.inverse * pair.matrix == IntMatrix::identity(n));
    CHECK(random_unimodular(n, seed) == pair.matrix);
  }
  CHECK(random_unimodular(6, 1) != random_unimodular(6, 2));
}

TEST_CASE("involution normal form") {
  const auto f = involution_normal_form(1, 1, 1);
  const IntMatrix expect{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  CHECK(f == expect);
  CHECK(f * f == IntMatrix::identity(4));
  CHECK(involution_normal_form(0, 0, 0).rows() == 0);
}

TEST_CASE("classifier round trips on normal forms") {
  for (std::size_t x = 0; x <= 4; ++x)
    for (std::size_t y = 0; y <= 4; ++y)
      for (std::size_t z = 0; z <= 4; ++z) {
        if (x + y + z == 0) continue;
        CHECK(classify_involution(involution_normal_form(x, y, z)) == InvolutionClass{x, y, z});
      }
}

TEST_CASE("classifier on random conjugates") {
  std::mt19937_64 rng(424242);
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 200; ++seed) {
    std::uniform_int_distribution<std::size_t> pick(0, 5);
    const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
    if (2 * x + y + z > 10 || 2 * x + y + z == 0) continue;
    const auto f = involution_normal_form(x, y, z);
    const auto s = random_unimodular_pair(f.rows(), seed);
    const IntMatrix p = s.inverse * f * s.matrix;
    CHECK(p * p == IntMatrix::identity(f.rows()));
    CHECK(classify_involution(p) == InvolutionClass{x, y, z});
    ++tested;
  }
}

TEST_CASE("classifier errors") {
  auto kind_of = [](const IntMatrix& m) {
    try {
      classify_involution(m);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Inconsistent;
  };
  CHECK(kind_of(IntMatrix(2, 3)) == ErrorKind::NotSquare);
  CHECK(kind_of(IntMatrix{{1, 1}, {0, 1}}) == ErrorKind::NotInvolution);
  CHECK(kind_of(IntMatrix{{2, 0}, {0, 1}}) == ErrorKind::NotInvolution);
  // A non-diagonalisable-looking but valid involution.
  CHECK(classify_involution(IntMatrix{{1, 1}, {0, -1}}) == InvolutionClass{1, 0, 0});
}

TEST_CASE("matrix arithmetic shape checks") {
  CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), Error);
  CHECK_THROWS_AS(IntMatrix(2, 3) - IntMatrix(3, 2), Error);
  CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), Error);
}
