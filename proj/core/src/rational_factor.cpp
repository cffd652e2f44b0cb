#include "weilcensus/rational_factor.hpp"

#include <algorithm>
#include <numeric>

#include "weilcensus/errors.hpp"
#include "weilcensus/fp_poly.hpp"

namespace weilcensus {
namespace {

// ---- arithmetic in (Z/m)[T] on IntPolynomial, coefficients kept in [0, m) ----

IntPolynomial reduce(const IntPolynomial& a, const BigInt& m) {
  std::vector<BigInt> v = a.coeffs();
  for (auto& c : v) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial symmetric(const IntPolynomial& a, const BigInt& m) {
  std::vector<BigInt> v = a.coeffs();
  const BigInt half = m / 2;
  for (auto& c : v) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m) {
  return reduce(a * b, m);
}

// Division by a polynomial whose leading coefficient is 1 mod m.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a0, const IntPolynomial& b0,
                                                     const BigInt& m) {
  const IntPolynomial a = reduce(a0, m), b = reduce(b0, m);
  if (b.is_zero() || b.leading() != 1) throw TheoremCheckFailure("Hensel lifting: divisor not monic mod m");
  if (a.degree() < b.degree()) return {IntPolynomial{}, a};
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t top = r.size(); top-- > db;) {
    mpz_mod(r[top].get_mpz_t(), r[top].get_mpz_t(), m.get_mpz_t());
    if (r[top] == 0) continue;
    const BigInt t = r[top];
    q[top - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= t * bc[j];
  }
  r.resize(db);
  return {reduce(IntPolynomial(std::move(q)), m), reduce(IntPolynomial(std::move(r)), m)};
}

IntPolynomial to_int(const FpPoly& f) {
  std::vector<BigInt> v;
  for (auto c : f.coeffs()) v.emplace_back(std::to_string(c));
  return IntPolynomial(std::move(v));
}

// s*a + t*b = 1 over F_p (a, b coprime).
std::pair<FpPoly, FpPoly> extended_gcd(const FpPoly& a, const FpPoly& b) {
  const std::uint64_t p = a.modulus();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly(p, {});
  FpPoly t0 = FpPoly(p, {}), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = s0 - q * s1;
    FpPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw TheoremCheckFailure("Hensel lifting: modular factors not coprime");
  const FpPoly inv = FpPoly::constant(p, inv_mod(r0.leading(), p));
  return {s0 * inv, t0 * inv};
}

// Quadratic Hensel lifting of f = g*h (h monic) from p to modulus >= target.
// Returns (g, h) modulo the final modulus.
std::pair<IntPolynomial, IntPolynomial> hensel_lift(const IntPolynomial& f, const FpPoly& g_p, const FpPoly& h_p,
                                                    std::uint64_t p, const BigInt& target, BigInt& final_modulus) {
  auto [s_p, t_p] = extended_gcd(g_p, h_p);
  IntPolynomial g = to_int(g_p), h = to_int(h_p), s = to_int(s_p), t = to_int(t_p);
  BigInt m(std::to_string(p));
  while (m < target) {
    const BigInt m2 = m * m;
    const IntPolynomial e = reduce(f - g * h, m2);
    auto [q, r] = divmod_monic(mul(s, e, m2), h, m2);
    const IntPolynomial g2 = reduce(g + t * e + q * g, m2);
    const IntPolynomial h2 = reduce(h + r, m2);
    const IntPolynomial b = reduce(s * g2 + t * h2 - IntPolynomial{1}, m2);
    auto [c, d] = divmod_monic(mul(s, b, m2), h2, m2);
    s = reduce(s - d, m2);
    t = reduce(t - t * b - c * g2, m2);
    g = g2;
    h = h2;
    m = m2;
  }
  final_modulus = m;
  return {g, h};
}

// Lift f = lc(f) * prod(factors) (factors monic mod p) to monic factors mod final modulus.
void lift_all(const IntPolynomial& f, const std::vector<FpPoly>& factors, std::uint64_t p, const BigInt& target,
              std::vector<IntPolynomial>& out, BigInt& modulus) {
  if (factors.size() == 1) {
    // Make monic modulo the lifting modulus.
    BigInt lc_inv;
    IntPolynomial fr = reduce(f, modulus);
    mpz_invert(lc_inv.get_mpz_t(), fr.leading().get_mpz_t(), modulus.get_mpz_t());
    out.push_back(reduce(fr * lc_inv, modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  FpPoly left = FpPoly::constant(p, 1), right = FpPoly::constant(p, 1);
  for (std::size_t i = 0; i < half; ++i) left = left * factors[i];
  for (std::size_t i = half; i < factors.size(); ++i) right = right * factors[i];
  const FpPoly lc_p = poly_mod_prime(IntPolynomial::constant(f.leading()), p);
  BigInt m;
  auto [g, h] = hensel_lift(f, left * lc_p, right, p, target, m);
  modulus = m;
  lift_all(g, std::vector<FpPoly>(factors.begin(), factors.begin() + static_cast<long>(half)), p, target, out,
           modulus);
  lift_all(h, std::vector<FpPoly>(factors.begin() + static_cast<long>(half), factors.end()), p, target, out,
           modulus);
}

BigInt factor_coefficient_bound(const IntPolynomial& f) {
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  return BigInt(2 * abs(f.leading()) * power(BigInt(2), static_cast<unsigned long>(f.degree())) * root + 1);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// f squarefree, primitive, degree >= 1, f(0) != 0 or degree 1.
std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f) {
  if (f.degree() <= 1) return {f.primitive_part()};

  // Pick the prime with the fewest modular factors among a few candidates.
  std::uint64_t best_p = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 8 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    const FpPoly fp = poly_mod_prime(f, p);
    if (!gcd(fp, fp.derivative()).is_one()) continue;
    ++tried;
    std::vector<FpPoly> facs;
    for (auto& ff : factor_mod_prime(fp)) facs.push_back(ff.factor);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw TheoremCheckFailure("zassenhaus: no suitable prime found");
  if (best.size() == 1) return {f.primitive_part()};

  const BigInt bound = factor_coefficient_bound(f);
  std::vector<IntPolynomial> lifted;
  BigInt modulus(std::to_string(best_p));
  {
    // Establish the final modulus first so every leaf is reduced consistently.
    BigInt m = modulus;
    while (m < bound) m *= m;
    modulus = m;
  }
  lift_all(f, best, best_p, bound, lifted, modulus);

  std::vector<IntPolynomial> found;
  IntPolynomial rest = f;
  std::vector<std::size_t> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);
  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      IntPolynomial g = IntPolynomial::constant(rest.leading());
      for (auto i : idx) g = mul(g, lifted[alive[i]], modulus);
      g = symmetric(g, modulus);
      if (g.is_zero()) continue;
      const IntPolynomial cand = g.primitive_part();
      if (auto q = divide_exact(rest, cand)) {
        found.push_back(cand);
        rest = q->primitive_part();
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < alive.size(); ++j) {
          if (std::find(idx.begin(), idx.end(), j) == idx.end()) keep.push_back(alive[j]);
        }
        alive = std::move(keep);
        hit = true;
        break;
      }
    } while (next_combination(idx, alive.size()));
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest.primitive_part());
  return found;
}

bool factor_less(const IntFactor& a, const IntFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& x = a.factor.coeffs();
  const auto& y = b.factor.coeffs();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

}  // namespace

std::vector<IntFactor> factor_over_q(const IntPolynomial& f0) {
  if (f0.is_zero()) throw ContractError("factor_over_q: zero polynomial");
  std::vector<IntFactor> out;
  if (f0.degree() == 0) return out;
  IntPolynomial f = f0.primitive_part();

  // Powers of T first.
  unsigned zeros = 0;
  while (f.coeff(zeros) == 0) ++zeros;
  if (zeros > 0) {
    out.push_back({IntPolynomial{0, 1}, zeros});
    f = IntPolynomial(std::vector<BigInt>(f.coeffs().begin() + zeros, f.coeffs().end()));
  }

  // Yun's squarefree decomposition over Q.
  unsigned i = 1;
  IntPolynomial a = f;
  IntPolynomial c = gcd(a, a.derivative());
  IntPolynomial w = *divide_exact(a, c);
  while (w.degree() > 0) {
    const IntPolynomial y = gcd(w, c);
    const IntPolynomial z = *divide_exact(w, y);
    if (z.degree() > 0) {
      for (auto& g : zassenhaus(z.primitive_part())) out.push_back({g, i});
    }
    w = y;
    c = *divide_exact(c, y);
    ++i;
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

}  // namespace weilcensus
