#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace weilcensus {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kInfiniteValuation = std::numeric_limits<std::size_t>::max();

// Largest e with ell^e | x; kInfiniteValuation for x = 0.
std::size_t v_ell(const BigInt& x, std::uint64_t ell);

// v_ell of a nonzero rational (may be negative); throws for zero.
long v_ell(const Rational& x, std::uint64_t ell);

// ell^{v_ell(x)} and x / ell^{v_ell(x)} for nonzero x.
BigInt ell_part(const BigInt& x, std::uint64_t ell);
BigInt prime_to_ell_part(const BigInt& x, std::uint64_t ell);

bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

// (p, a) with n = p^a, or nullopt-like {0, 0} when n is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power_decomposition(const BigInt& n);

BigInt power(const BigInt& base, unsigned long exponent);

// Prime factorization with multiplicities, primes ascending.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

// Parses a decimal integer, optionally signed; throws ContractError.
BigInt parse_integer(const std::string& text);

}  // namespace weilcensus
