#include <algorithm>
#include <map>
#include <random>

#include "weilcensus/errors.hpp"
#include "weilcensus/integer.hpp"

namespace weilcensus {
namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
BigInt pollard_brent(const BigInt& n, std::uint64_t seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::mt19937_64 rng(seed);
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  for (;;) {
    BigInt y = gr.get_z_range(n - 1) + 1;
    BigInt c = gr.get_z_range(n - 1) + 1;
    const unsigned long m = 128;
    BigInt g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min<unsigned long>(m, r.get_ui() - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t& seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_brent(n, seed++);
  factor_into(d, out, seed);
  factor_into(BigInt(n / d), out, seed);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
  if (n <= 0) throw ContractError("factor_integer: argument must be positive");
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (rest == 1) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++found[BigInt(p)];
    }
  }
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  factor_into(rest, found, seed);
  return {found.begin(), found.end()};
}

}  // namespace weilcensus
