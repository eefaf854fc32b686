#include "polyspace/invariants.hpp"

#include <algorithm>

#include "polyspace/combinatorics.hpp"
#include "polyspace/error.hpp"

namespace polyspace {

PoincarePoly::PoincarePoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c < 0) throw Error(ErrorKind::NegativeCoefficient, "negative Betti number " + c.str());
  trim();
}

BigInt PoincarePoly::operator[](std::ptrdiff_t q) const {
  if (q < 0 || q > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(q)];
}

void PoincarePoly::add(std::ptrdiff_t q, const BigInt& c) {
  if (q < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  const auto idx = static_cast<std::size_t>(q);
  if (idx >= coeffs_.size()) coeffs_.resize(idx + 1, 0);
  BigInt next = coeffs_[idx] + c;
  if (next < 0)
    throw Error(ErrorKind::NegativeCoefficient,
                "coefficient of t^" + std::to_string(q) + " would become " + next.str());
  coeffs_[idx] = std::move(next);
  trim();
}

BigInt PoincarePoly::value_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

PoincarePoly PoincarePoly::times_one_plus_t() const {
  PoincarePoly out;
  for (std::size_t q = 0; q < coeffs_.size(); ++q) {
    out.add(static_cast<std::ptrdiff_t>(q), coeffs_[q]);
    out.add(static_cast<std::ptrdiff_t>(q) + 1, coeffs_[q]);
  }
  return out;
}

std::string PoincarePoly::to_string() const {
  std::string s;
  for (const auto& c : coeffs_) {
    if (!s.empty()) s += ' ';
    s += c.str();
  }
  return s.empty() ? "0" : s;
}

void PoincarePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincarePoly divide_difference_by_one_plus_t(const PoincarePoly& a, const PoincarePoly& b) {
  const std::ptrdiff_t top = std::max(a.degree(), b.degree());
  std::vector<BigInt> quotient;
  BigInt carry = 0;  // previous quotient coefficient
  for (std::ptrdiff_t q = 0; q <= top; ++q) {
    const BigInt diff = a[q] - b[q];
    if (diff < 0)
      throw Error(ErrorKind::NegativeCoefficient,
                  "difference has coefficient " + diff.str() + " at t^" + std::to_string(q));
    BigInt c = diff - carry;
    if (q == top) {
      if (c != 0) throw Error(ErrorKind::Inconsistent, "difference is not divisible by 1 + t");
      break;
    }
    if (c < 0)
      throw Error(ErrorKind::NegativeCoefficient,
                  "quotient coefficient " + c.str() + " at t^" + std::to_string(q));
    quotient.push_back(c);
    carry = std::move(c);
  }
  return PoincarePoly(std::move(quotient));
}

namespace {

// Closed form for dim H^q(M_n / tau; Z/2).
BigInt mod2_quotient_betti(int n, int m, int q) {
  if (q < 0 || q > n - 3) return 0;
  const int top = q <= m - 1 ? q : n - 3 - q;
  BigInt s = 0;
  for (int i = 0; i <= top; ++i) s += binom(n - 1, i);
  return s;
}

}  // namespace

SeriesBundle series_bundle(int n) {
  const InvariantTable t = invariant_table(n);
  const int m = t.m;
  SeriesBundle b;

  for (int q = 0; q <= m - 2; ++q) b.ps_M.add(q, binom(n - 1, q));
  b.ps_M.add(m - 1, 2 * t.D);
  for (int q = m; q <= n - 3; ++q) b.ps_M.add(q, binom(n - 1, q + 2));

  for (int q = 0; q <= m - 2; q += 2) b.phi.add(q, binom(n - 1, q));
  b.phi.add(m - 1, t.D);
  for (int q = m; q <= n - 4; ++q)
    if (q % 2 == 1) b.phi.add(q, binom(n - 1, q + 2));

  b.ps_Q_E = b.phi.times_one_plus_t();

  for (int q = 1; q <= m - 2; q += 2) b.gamma_E.add(q, binom(n - 1, q));
  b.gamma_E.add(m - 1, t.beta);
  for (int q = m; q <= n - 3; ++q)
    if (q % 2 == 0) b.gamma_E.add(q, binom(n - 1, q + 2));

  for (int q = 0; q <= n - 3; ++q) b.ps_Z2_Mbar.add(q, mod2_quotient_betti(n, m, q));

  for (int q = 0; q <= m - 2; ++q) b.ps_Z2_E.add(q, binom(n, q));
  b.ps_Z2_E.add(m - 1, binom(n, m - 1) + t.beta);
  b.ps_Z2_E.add(m, binom(n, m - 1) + t.beta);
  for (int q = m + 1; q <= n - 2; ++q) b.ps_Z2_E.add(q, binom(n, q + 2));
  return b;
}

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names{"ps-m",    "phi",        "ps-q-e",
                                              "gamma-e", "ps-z2-mbar", "ps-z2-e"};
  return names;
}

const PoincarePoly& select_series(const SeriesBundle& bundle, const std::string& which) {
  if (which == "ps-m") return bundle.ps_M;
  if (which == "phi") return bundle.phi;
  if (which == "ps-q-e") return bundle.ps_Q_E;
  if (which == "gamma-e") return bundle.gamma_E;
  if (which == "ps-z2-mbar") return bundle.ps_Z2_Mbar;
  if (which == "ps-z2-e") return bundle.ps_Z2_E;
  throw Error(ErrorKind::InvalidArgument, "unknown series '" + which + "'");
}

BigInt r2_cup_rank_closed_form(int n, int q) {
  const InvariantTable t = invariant_table(n);
  const int m = t.m;
  if (q < 0 || q + 2 > n - 3) return 0;
  if (q <= m - 3) return mod2_quotient_betti(n, m, q);
  if (q == m - 2) return t.gamma - t.beta;
  return mod2_quotient_betti(n, m, q + 2);  // m - 1 <= q <= 2m - 4
}

PoincarePoly gysin_dims(int n, const std::vector<BigInt>& lambdas) {
  const int m = half_of_odd(n);
  auto lam = [&](int q) -> BigInt {
    return q < 0 || q >= static_cast<int>(lambdas.size()) ? BigInt(0) : lambdas[static_cast<std::size_t>(q)];
  };
  const int top = std::max(n - 1, static_cast<int>(lambdas.size()) + 2);
  std::vector<BigInt> dims;
  for (int q = 0; q <= top; ++q) {
    BigInt d = mod2_quotient_betti(n, m, q - 1) + mod2_quotient_betti(n, m, q) - lam(q - 2) - lam(q - 1);
    if (d < 0)
      throw Error(ErrorKind::NegativeCoefficient,
                  "Gysin count at degree " + std::to_string(q) + " is " + d.str());
    dims.push_back(std::move(d));
  }
  return PoincarePoly(std::move(dims));
}

bool gysin_check(int n, const std::vector<BigInt>& lambdas) {
  try {
    return gysin_dims(n, lambdas) == series_bundle(n).ps_Z2_E;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NegativeCoefficient) return false;
    throw;
  }
}

DivisorCounts wang_divisor_counts(int n) {
  const InvariantTable t = invariant_table(n);
  const int m = t.m;
  const SeriesBundle b = series_bundle(n);

  const BigInt free_rank = b.ps_Q_E[m - 1];
  const BigInt torsion = b.gamma_E[m - 1];

  DivisorCounts c;
  c.zeros = m % 2 == 0 ? free_rank - binom(n - 1, m - 2) : free_rank;
  c.twos = torsion;
  c.ones = 2 * t.D - c.zeros - c.twos;
  if (c.zeros < 0 || c.ones < 0)
    throw Error(ErrorKind::Inconsistent, "negative divisor count at n = " + std::to_string(n));
  return c;
}

InvolutionClass tau_normal_form(int n) {
  const DivisorCounts c = wang_divisor_counts(n);
  if (c.zeros < c.ones)
    throw Error(ErrorKind::Inconsistent, "fewer zero divisors than unit divisors at n = " + std::to_string(n));
  return {c.ones, c.zeros - c.ones, c.twos};
}

}  // namespace polyspace
