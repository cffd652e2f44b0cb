#include <algorithm>
#include <cctype>

#include "weilcensus/errors.hpp"
#include "weilcensus/integer.hpp"

namespace weilcensus {

ValidationError::ValidationError(std::vector<std::string> violations)
    : ContractError([&] {
        std::string msg = "validation failed";
        for (const auto& v : violations) msg += "; " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

std::size_t v_ell(const BigInt& x, std::uint64_t ell) {
  if (ell < 2) throw ContractError("v_ell: modulus must be prime");
  if (x == 0) return kInfiniteValuation;
  BigInt rest = abs(x);
  const BigInt l(static_cast<unsigned long>(ell));
  std::size_t e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), l.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), l.get_mpz_t());
    ++e;
  }
  return e;
}

long v_ell(const Rational& x, std::uint64_t ell) {
  if (x == 0) throw ContractError("v_ell of zero rational is infinite");
  return static_cast<long>(v_ell(BigInt(x.get_num()), ell)) -
         static_cast<long>(v_ell(BigInt(x.get_den()), ell));
}

BigInt ell_part(const BigInt& x, std::uint64_t ell) {
  if (x == 0) throw ContractError("ell_part of zero");
  return power(BigInt(static_cast<unsigned long>(ell)), v_ell(x, ell));
}

BigInt prime_to_ell_part(const BigInt& x, std::uint64_t ell) {
  return BigInt(abs(x) / ell_part(x, ell));
}

bool is_prime(std::uint64_t n) {
  return is_prime(BigInt(std::to_string(n)));
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::pair<std::uint64_t, unsigned> prime_power_decomposition(const BigInt& n) {
  if (n < 2) return {0, 0};
  const auto factors = factor_integer(n);
  if (factors.size() != 1 || !factors[0].first.fits_ulong_p()) return {0, 0};
  return {factors[0].first.get_ui(), factors[0].second};
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

BigInt parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i >= text.size() ||
      !std::all_of(text.begin() + static_cast<long>(i), text.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ContractError("not an exact integer: '" + text + "'");
  }
  BigInt out;
  out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

}  // namespace weilcensus
