#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilcensus/fp_poly.hpp"
#include "weilcensus/polynomial.hpp"

namespace weilcensus {

/// Characteristic polynomial of Frobenius of a g-dimensional abelian variety
/// over F_q: monic, degree 2g, roots of absolute value sqrt(q). Only
/// constructible through validate().
class WeilPolynomial {
 public:
  // Throws ValidationError listing every violated invariant.
  static WeilPolynomial validate(const BigInt& q, const IntPolynomial& ch);
  // Empty when (q, ch) is a valid Weil polynomial.
  static std::vector<std::string> violations(const BigInt& q, const IntPolynomial& ch);

  const BigInt& q() const noexcept { return q_; }
  const IntPolynomial& ch() const noexcept { return ch_; }
  unsigned dimension() const noexcept { return dimension_; }

  friend bool operator==(const WeilPolynomial& a, const WeilPolynomial& b) {
    return a.q_ == b.q_ && a.ch_ == b.ch_;
  }

 private:
  WeilPolynomial(BigInt q, IntPolynomial ch);

  BigInt q_;
  IntPolynomial ch_;
  unsigned dimension_ = 0;
};

// Tolerance on | |alpha|^2 - q | in the root-modulus check.
inline constexpr long double kWeilModulusTolerance = 1e-10L;

// #A(F_{q^n}) = prod (1 - alpha_i^n) = det(I - C^n), C the companion matrix.
BigInt point_count(const WeilPolynomial& a, std::uint64_t n);
// Same quantity as Res(ch, 1 - T^n); an independent route used for cross-checks.
BigInt point_count_via_resultant(const WeilPolynomial& a, std::uint64_t n);
// det(I - C^n) mod `modulus`, for exponents too large for exact counts.
BigInt point_count_mod(const WeilPolynomial& a, const BigInt& n, const BigInt& modulus);

std::vector<BigInt> point_count_sequence(const WeilPolynomial& a, std::size_t n_max);

// Power sums s_m = sum alpha_i^m for m = 1..m_max (Newton's identities).
std::vector<BigInt> root_power_sums(const IntPolynomial& monic, std::size_t m_max);

// Weil polynomial of a product variety.
WeilPolynomial product(const WeilPolynomial& a, const WeilPolynomial& b);

/// F_2[Frobenius]-module structure of A[2], as invariant factors
/// f_1 | f_2 | ... over F_2 whose product is ch mod 2. The default is the
/// cyclic module F_2[T]/(ch mod 2); ch alone does not determine the module, so
/// callers with more information should supply the factors.
class TwoTorsionModule {
 public:
  static TwoTorsionModule cyclic(const WeilPolynomial& a);
  // Throws ValidationError if the factors are not monic, not a divisor chain,
  // or do not multiply to ch mod 2.
  static TwoTorsionModule make(const WeilPolynomial& a, std::vector<FpPoly> invariant_factors);

  const std::vector<FpPoly>& invariant_factors() const noexcept { return factors_; }

 private:
  explicit TwoTorsionModule(std::vector<FpPoly> f) : factors_(std::move(f)) {}
  std::vector<FpPoly> factors_;
};

// #ker(T^n - 1) = 2^{sum deg gcd(f_i, T^n - 1)}.
BigInt fixed_two_torsion(const TwoTorsionModule& m, std::uint64_t n);

}  // namespace weilcensus

namespace weilcensus {

// Exact test of (q^{n/2} - 1)^{2g} <= count <= (q^{n/2} + 1)^{2g}.
bool within_weil_bounds(const BigInt& q, unsigned g, std::uint64_t n, const BigInt& count);

}  // namespace weilcensus
