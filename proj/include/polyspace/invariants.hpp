#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyspace/bigint.hpp"
#include "polyspace/int_matrix.hpp"

namespace polyspace {

/// Polynomial in t with nonnegative coefficients; coeffs[q] multiplies t^q.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class PoincarePoly {
 public:
  PoincarePoly() = default;
  explicit PoincarePoly(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of t^q; zero outside the stored range.
  BigInt operator[](std::ptrdiff_t q) const;
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

  /// Adds c * t^q. Throws Error{NegativeCoefficient} if a coefficient would
  /// drop below zero.
  void add(std::ptrdiff_t q, const BigInt& c);

  BigInt value_at_one() const;
  PoincarePoly times_one_plus_t() const;

  std::string to_string() const;  // "1 6 30 6 1"

  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// (a - b) / (1 + t) when the division is exact and every intermediate and
/// quotient coefficient is nonnegative; throws Error{NegativeCoefficient} or
/// Error{Inconsistent} otherwise.
PoincarePoly divide_difference_by_one_plus_t(const PoincarePoly& a, const PoincarePoly& b);

/// Betti-number polynomials of the polygon space M_n, its quotient by the
/// conjugation involution, and the mapping torus E_n.
struct SeriesBundle {
  PoincarePoly ps_M;        // H_*(M_n; Z)
  PoincarePoly phi;         // H_*(M_n / tau; Q)
  PoincarePoly ps_Q_E;      // H_*(E_n; Q) = (1 + t) phi
  PoincarePoly gamma_E;     // number of Z/2 summands of H_q(E_n; Z)
  PoincarePoly ps_Z2_Mbar;  // H^*(M_n / tau; Z/2)
  PoincarePoly ps_Z2_E;     // H^*(E_n; Z/2)
};

SeriesBundle series_bundle(int n);

/// Which member of SeriesBundle a CLI name refers to: ps-m, phi, ps-q-e,
/// gamma-e, ps-z2-mbar, ps-z2-e. Throws Error{InvalidArgument}.
const PoincarePoly& select_series(const SeriesBundle& bundle, const std::string& which);
const std::vector<std::string>& series_names();

/// Closed form for the rank of cup with R^2 : H^q -> H^{q+2} of M_n / tau
/// with Z/2 coefficients; zero for q < 0 or q + 2 > n - 3.
BigInt r2_cup_rank_closed_form(int n, int q);

/// dim H^q(E_n; Z/2) = h_{q-1} + h_q - lambda_{q-2} - lambda_{q-1} where
/// h = ps_Z2_Mbar and lambdas[q] = lambda_q (zero past the end).
PoincarePoly gysin_dims(int n, const std::vector<BigInt>& lambdas);

/// True iff gysin_dims(n, lambdas) reproduces ps_Z2_E exactly.
bool gysin_check(int n, const std::vector<BigInt>& lambdas);

/// Counts of the elementary divisors 0, 1, 2 of 1 - tau_* on H_{m-1}(M_n; Z).
struct DivisorCounts {
  BigInt zeros;
  BigInt ones;
  BigInt twos;

  friend bool operator==(const DivisorCounts&, const DivisorCounts&) = default;
};

/// Reads the divisor counts off the Wang sequence of E_n -> S^1 in degree
/// m - 1: rank H_{m-1}(M_n) = 2D, and H_{m-1}(E_n; Z) has a_{m-1} free and
/// b_{m-1} Z/2 summands (coefficients of ps_Q_E and gamma_E).
///
/// Assumed, not derived here: on H_{m-2}(M_n; Z) the map 1 - tau_* is zero
/// when m is even and multiplication by 2 when m is odd. Both facts come from
/// comparing with the torus (S^1)^{n-1}, which this library does not model.
///
///   m even: zeros = a_{m-1} - C(n-1, m-2)   (the kernel on H_{m-2} is free)
///   m odd:  zeros = a_{m-1}
///   twos = b_{m-1},  ones = 2D - zeros - twos
DivisorCounts wang_divisor_counts(int n);

/// (x, y, z) = (#1, #0 - #1, #2) from wang_divisor_counts.
/// Throws Error{Inconsistent} if #0 < #1.
InvolutionClass tau_normal_form(int n);

}  // namespace polyspace
