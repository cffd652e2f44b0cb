#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "weilcensus/integer.hpp"

namespace weilcensus {

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// Always normalized: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  const BigInt& leading() const;
  // Coefficient of T^i, zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;

  IntPolynomial derivative() const;
  BigInt content() const;
  IntPolynomial primitive_part() const;
  // T^deg * f(1/T).
  IntPolynomial reversed() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'T') const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

// lc(b)^{deg a - deg b + 1} * a mod b, computed over Z.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Quotient a / b when b divides a in Z[T], nullopt otherwise.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Euclidean division by a monic divisor.
IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& monic);

// Res(f, g) = lc(f)^{deg g} * prod_{f(a)=0} g(a), exact, by the subresultant PRS.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

// Primitive gcd over Z with positive leading coefficient (zero if both zero).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Squarefree part over Q, returned primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& f);
bool is_squarefree(const IntPolynomial& f);

}  // namespace weilcensus
