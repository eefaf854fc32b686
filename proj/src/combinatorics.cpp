#include "polyspace/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "polyspace/error.hpp"

namespace polyspace {

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  // r stays equal to C(n - k + i, i) after step i, so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

int half_of_odd(int n) {
  if (n < 5 || n % 2 == 0)
    throw Error(ErrorKind::InvalidArgument,
                "n must be odd and at least 5, got " + std::to_string(n));
  return (n - 1) / 2;
}

BigInt alpha_closed_form(int m) {
  BigInt sum = 0;
  for (int i = 0; i < m; ++i) sum += (BigInt(1) << (m - 1 - i)) * binom(2 * i, i);
  return sum;
}

BigInt sine_sum(int m) {
  BigInt sum = 0;
  for (int k = 0; k <= m; ++k) {
    switch ((m - k) % 4) {
      case 1: sum += binom(2 * m, k); break;
      case 3: sum -= binom(2 * m, k); break;
      default: break;
    }
  }
  return sum;
}

InvariantTable invariant_table(int n) {
  const int m = half_of_odd(n);
  InvariantTable t;
  t.n = n;
  t.m = m;
  t.D = binom(n - 1, m - 1);
  t.alpha = alpha_closed_form(m);
  t.beta = t.D - t.alpha;
  for (int i = 0; i <= m - 2; ++i) t.gamma += binom(n - 1, i);
  for (int i = 0; i <= (m - 1) / 2; ++i) {
    if (i % 2 == 0)
      t.d += binom(2 * m, m - 1 - 2 * i);
    else
      t.d -= binom(2 * m, m - 1 - 2 * i);
  }

  if (t.beta < 0 || t.d != t.alpha || t.gamma < t.beta)
    throw std::logic_error("invariant table identities fail at n = " + std::to_string(n));
  return t;
}

std::vector<BigInt> alpha_series(std::size_t count) {
  std::vector<BigInt> central(count);
  std::vector<BigInt> powers(count);
  for (std::size_t k = 0; k < count; ++k) {
    central[k] = binom(static_cast<std::int64_t>(2 * k), static_cast<std::int64_t>(k));
    powers[k] = BigInt(1) << k;
  }
  std::vector<BigInt> out(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j <= i; ++j) out[i] += powers[i - j] * central[j];
  return out;
}

}  // namespace polyspace
