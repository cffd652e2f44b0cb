#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weilcensus/polynomial.hpp"

namespace weilcensus {

/// Polynomial over the prime field F_p (p < 2^63), ascending coefficients,
/// normalized (no trailing zeros).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly x(std::uint64_t p);  // the polynomial T

  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t leading() const { return c_.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  FpPoly monic() const;
  FpPoly derivative() const;
  std::uint64_t eval(std::uint64_t x) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  std::string to_string(char var = 'T') const;

 private:
  void normalize();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly gcd(const FpPoly& a, const FpPoly& b);  // monic, zero if both zero
FpPoly pow_mod(const FpPoly& base, const BigInt& exponent, const FpPoly& modulus);

// Coefficientwise reduction of an integer polynomial; ell must be prime.
FpPoly poly_mod_prime(const IntPolynomial& f, std::uint64_t ell);

bool is_irreducible(const FpPoly& f);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned multiplicity;
};

// Complete factorization into monic irreducibles, sorted by (degree, coeffs).
// Equal-degree splitting draws from a PRNG with the given seed; the result is
// seed-independent.
std::vector<FpFactor> factor_mod_prime(const FpPoly& f, std::uint64_t seed = 0x5eed);

}  // namespace weilcensus
