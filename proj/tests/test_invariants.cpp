#include <doctest.h>

#include <vector>

#include "polyspace/combinatorics.hpp"
#include "polyspace/error.hpp"
#include "polyspace/invariants.hpp"

using namespace polyspace;

namespace {

PoincarePoly poly(std::initializer_list<long long> cs) {
  std::vector<BigInt> v;
  for (auto c : cs) v.emplace_back(c);
  return PoincarePoly(v);
}

std::vector<BigInt> closed_lambdas(int n) {
  std::vector<BigInt> out;
  for (int q = 0; q <= n - 3; ++q) out.push_back(r2_cup_rank_closed_form(n, q));
  return out;
}

}  // namespace

TEST_CASE("PoincarePoly") {
  const auto p = poly({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p.to_string() == "1 2");
  CHECK(PoincarePoly().to_string() == "0");
  CHECK(p[-1] == 0);
  CHECK(p[5] == 0);
  CHECK(p.times_one_plus_t() == poly({1, 3, 2}));
  CHECK(p.value_at_one() == 3);
  PoincarePoly q = p;
  CHECK_THROWS_AS(q.add(0, -2), Error);
  CHECK_THROWS_AS(poly({1, -1}), Error);
}

TEST_CASE("division of a difference by 1 + t") {
  CHECK(divide_difference_by_one_plus_t(poly({2, 2, 1}), poly({1})) == poly({1, 1}));
  CHECK_THROWS_AS(divide_difference_by_one_plus_t(poly({1, 1, 1}), poly({})), Error);  // remainder
  CHECK_THROWS_AS(divide_difference_by_one_plus_t(poly({1}), poly({2})), Error);       // negative
  CHECK_THROWS_AS(divide_difference_by_one_plus_t(poly({0, 1}), poly({})), Error);     // negative quotient
}

TEST_CASE("series at n = 7") {
  const auto b = series_bundle(7);
  CHECK(b.ps_M == poly({1, 6, 30, 6, 1}));
  CHECK(b.phi == poly({1, 0, 15, 6}));
  CHECK(b.ps_Q_E == poly({1, 1, 15, 21, 6}));
  CHECK(b.gamma_E == poly({0, 6, 1, 0, 1}));
  CHECK(b.ps_Z2_Mbar == poly({1, 7, 22, 7, 1}));
  CHECK(b.ps_Z2_E == poly({1, 7, 22, 22, 7, 1}));
}

TEST_CASE("series at n = 5") {
  const auto b = series_bundle(5);
  CHECK(b.ps_M == poly({1, 8, 1}));  // closed surface of genus 4
  CHECK(b.ps_Z2_Mbar == poly({1, 5, 1}));
  CHECK(b.ps_Z2_E == poly({1, 5, 5, 1}));
  CHECK(b.gamma_E[b.ps_M.degree() - 1] == 0);
}

TEST_CASE("series invariants for odd n up to 21") {
  for (int n = 5; n <= 21; n += 2) {
    CAPTURE(n);
    const auto t = invariant_table(n);
    const auto b = series_bundle(n);
    CHECK(b.ps_M.degree() == n - 3);
    for (int q = 0; q <= n - 3; ++q) CHECK(b.ps_M[q] == b.ps_M[n - 3 - q]);
    CHECK(b.ps_Z2_Mbar.degree() == n - 3);
    for (int q = 0; q <= n - 3; ++q) CHECK(b.ps_Z2_Mbar[q] == b.ps_Z2_Mbar[n - 3 - q]);

    BigInt total = 2 * t.D;
    for (int q = 0; q <= t.m - 2; ++q) total += binom(n - 1, q);
    for (int q = t.m; q <= n - 3; ++q) total += binom(n - 1, q + 2);
    CHECK(b.ps_M.value_at_one() == total);

    CHECK(b.ps_Q_E == b.phi.times_one_plus_t());
    CHECK(b.gamma_E[t.m - 1] == t.beta);
    // Middle rational rank: D, plus the C(n-1, m-2) carried up from phi when m is even.
    CHECK(b.ps_Q_E[t.m - 1] == t.D + (t.m % 2 == 0 ? binom(n - 1, t.m - 2) : BigInt(0)));
    CHECK(b.phi[t.m - 1] == t.D);
    CHECK(divide_difference_by_one_plus_t(b.ps_Z2_E, b.ps_Q_E) == b.gamma_E);
    // Euler characteristic of a circle bundle vanishes.
    BigInt chi = 0;
    for (int q = 0; q <= b.ps_Z2_E.degree(); ++q) chi += q % 2 == 0 ? b.ps_Z2_E[q] : BigInt(-b.ps_Z2_E[q]);
    CHECK(chi == 0);
  }
}

TEST_CASE("series selection by name") {
  const auto b = series_bundle(7);
  CHECK(series_names().size() == 6);
  for (const auto& name : series_names()) CHECK_NOTHROW(select_series(b, name));
  CHECK(select_series(b, "gamma-e") == b.gamma_E);
  CHECK_THROWS_AS(select_series(b, "nope"), Error);
}

TEST_CASE("Gysin recurrence") {
  CHECK(gysin_check(7, {1, 6, 1}));
  CHECK(gysin_check(5, {1}));
  CHECK_FALSE(gysin_check(7, {1, 5, 1}));
  CHECK_FALSE(gysin_check(7, {1, 6, 1, 1}));
  CHECK_FALSE(gysin_check(7, {100}));  // drives a count negative
  CHECK(gysin_dims(7, {1, 6, 1}) == poly({1, 7, 22, 22, 7, 1}));
  CHECK_THROWS_AS(gysin_dims(7, {100}), Error);
  for (int n = 5; n <= 21; n += 2) {
    CAPTURE(n);
    auto lambdas = closed_lambdas(n);
    CHECK(gysin_check(n, lambdas));
    const auto t = invariant_table(n);
    CHECK(lambdas[static_cast<std::size_t>(t.m - 2)] == t.gamma - t.beta);
    lambdas[static_cast<std::size_t>(t.m - 2)] += 1;
    CHECK_FALSE(gysin_check(n, lambdas));
  }
}

TEST_CASE("cup rank closed form at n = 5, 7, 9") {
  auto row = [](int n) {
    std::vector<BigInt> out;
    for (int q = 0; q <= n - 3; ++q) out.push_back(r2_cup_rank_closed_form(n, q));
    return out;
  };
  CHECK(row(5) == std::vector<BigInt>{1, 0, 0});
  CHECK(row(7) == std::vector<BigInt>{1, 6, 1, 0, 0});
  CHECK(row(9) == std::vector<BigInt>{1, 9, 29, 9, 1, 0, 0});
  CHECK(r2_cup_rank_closed_form(9, -1) == 0);
}

TEST_CASE("divisor counts reproduce (D, alpha, beta)") {
  CHECK(wang_divisor_counts(5) == DivisorCounts{4, 4, 0});
  CHECK(wang_divisor_counts(7) == DivisorCounts{15, 14, 1});
  CHECK(wang_divisor_counts(9) == DivisorCounts{56, 48, 8});
  for (int n = 5; n <= 21; n += 2) {
    CAPTURE(n);
    const auto t = invariant_table(n);
    const auto c = wang_divisor_counts(n);
    CHECK(c == DivisorCounts{t.D, t.alpha, t.beta});
    CHECK(c.zeros + c.ones + c.twos == 2 * t.D);
  }
}

TEST_CASE("normal form of the conjugation action") {
  CHECK(tau_normal_form(5) == InvolutionClass{4, 0, 0});
  CHECK(tau_normal_form(7) == InvolutionClass{14, 1, 1});
  CHECK(tau_normal_form(9) == InvolutionClass{48, 8, 8});
  for (int n = 5; n <= 21; n += 2) {
    const auto t = invariant_table(n);
    const auto triple = tau_normal_form(n);
    CHECK(triple == InvolutionClass{t.alpha, t.beta, t.beta});
    CHECK((triple == InvolutionClass{t.D, 0, 0}) == (n == 5));
  }
  for (int n = 5; n <= 11; n += 2) {
    const auto triple = tau_normal_form(n);
    const auto f = involution_normal_form(to_u64(triple.x), to_u64(triple.y), to_u64(triple.z));
    CHECK(classify_involution(f) == triple);
  }
}
