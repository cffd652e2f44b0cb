#include "weilcensus/fp_poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "weilcensus/errors.hpp"

namespace weilcensus {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ContractError("inverse of zero in F_p");
  return pow_mod(a, p - 2, p);
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  normalize();
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }
FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = inv_mod(leading(), p_);
  std::vector<std::uint64_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = mul_mod(c_[i], inv, p_);
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_, {});
  std::vector<std::uint64_t> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = mul_mod(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(v));
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
  return acc;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  }
  return FpPoly(a.p_, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
  }
  return FpPoly(a.p_, std::move(v));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
  std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  return FpPoly(a.p_, std::move(v));
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string FpPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::uint64_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      if (c != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw ContractError("polynomial division by zero over F_p");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint64_t inv = inv_mod(bc.back(), p);
  std::vector<std::uint64_t> q(r.size() - db, 0);
  for (std::size_t top = r.size(); top-- > db;) {
    if (r[top] == 0) continue;
    const std::uint64_t t = mul_mod(r[top], inv, p);
    q[top - db] = t;
    for (std::size_t j = 0; j <= db; ++j) {
      r[top - db + j] = (r[top - db + j] + p - mul_mod(t, bc[j], p)) % p;
    }
  }
  r.resize(db);
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(const FpPoly& a0, const FpPoly& b0) {
  FpPoly a = a0, b = b0;
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly pow_mod(const FpPoly& base, const BigInt& exponent, const FpPoly& modulus) {
  if (exponent < 0) throw ContractError("pow_mod: negative exponent");
  const std::uint64_t p = modulus.modulus();
  FpPoly result = FpPoly::constant(p, 1) % modulus;
  FpPoly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

FpPoly poly_mod_prime(const IntPolynomial& f, std::uint64_t ell) {
  if (!is_prime(ell)) throw ContractError("poly_mod_prime: modulus " + std::to_string(ell) + " is not prime");
  std::vector<std::uint64_t> v;
  v.reserve(f.coeffs().size());
  const BigInt l(std::to_string(ell));
  for (const auto& c : f.coeffs()) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), c.get_mpz_t(), l.get_mpz_t());
    v.push_back(r.get_ui());
  }
  return FpPoly(ell, std::move(v));
}

namespace {

BigInt prime_big(std::uint64_t p) { return BigInt(std::to_string(p)); }

// T^{p^k} mod f by repeated p-th powering.
FpPoly frobenius_power(const FpPoly& f, unsigned k) {
  const std::uint64_t p = f.modulus();
  FpPoly x = FpPoly::x(p) % f;
  for (unsigned i = 0; i < k; ++i) x = pow_mod(x, prime_big(p), f);
  return x;
}

// p-th root of a polynomial whose derivative vanishes (all exponents divisible by p).
FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
  // Coefficients live in F_p, where x^p = x.
  return FpPoly(p, std::move(v));
}

// Squarefree factorization: pairs (squarefree monic, multiplicity).
std::vector<std::pair<FpPoly, unsigned>> squarefree_factorization(const FpPoly& f0) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  const std::uint64_t p = f0.modulus();
  FpPoly f = f0.monic();
  if (f.degree() <= 0) return out;
  const FpPoly df = f.derivative();
  if (df.is_zero()) {
    for (auto& [g, m] : squarefree_factorization(pth_root(f))) out.emplace_back(g, m * static_cast<unsigned>(p));
    return out;
  }
  FpPoly c = gcd(f, df);
  FpPoly w = divmod(f, c).first;
  unsigned i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree_factorization(pth_root(c))) out.emplace_back(g, m * static_cast<unsigned>(p));
  }
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(const FpPoly& f0) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  const std::uint64_t p = f0.modulus();
  FpPoly f = f0;
  FpPoly xq = FpPoly::x(p);
  unsigned d = 0;
  while (2 * (d + 1) <= static_cast<unsigned>(std::max(f.degree(), 0))) {
    ++d;
    xq = pow_mod(xq, prime_big(p), f);
    FpPoly g = gcd(f, xq - FpPoly::x(p));
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      xq = xq % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

FpPoly random_poly(std::uint64_t p, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> v(static_cast<std::size_t>(max_degree) + 1);
  for (auto& c : v) c = dist(rng);
  return FpPoly(p, std::move(v));
}

// Equal-degree splitting (Cantor-Zassenhaus); f squarefree, all factors of degree d.
void equal_degree(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.modulus();
  for (;;) {
    FpPoly a = random_poly(p, f.degree() - 1, rng);
    if (a.degree() <= 0) continue;
    FpPoly g;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^{2^{d-1}}.
      FpPoly t = a, acc = a;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      g = gcd(f, acc);
    } else {
      g = gcd(f, a);
      if (g.is_one()) {
        BigInt e = (power(prime_big(p), d) - 1) / 2;
        g = gcd(f, pow_mod(a, e, f) - FpPoly::constant(p, 1));
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
  if (f.degree() <= 0) return false;
  const FpPoly m = f.monic();
  const std::uint64_t p = m.modulus();
  const auto n = static_cast<unsigned>(m.degree());
  // Rabin: T^{p^n} = T mod f and gcd(T^{p^{n/r}} - T, f) = 1 for primes r | n.
  if (!(frobenius_power(m, n) == FpPoly::x(p) % m)) return false;
  for (const auto& [r, e] : factor_integer(BigInt(n))) {
    (void)e;
    const unsigned k = n / static_cast<unsigned>(r.get_ui());
    if (!gcd(m, frobenius_power(m, k) - FpPoly::x(p)).is_one()) return false;
  }
  return true;
}

std::vector<FpFactor> factor_mod_prime(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw ContractError("factor_mod_prime: zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<FpFactor> out;
  for (const auto& [sqf, mult] : squarefree_factorization(f)) {
    for (const auto& [block, d] : distinct_degree(sqf)) {
      std::vector<FpPoly> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  // Merge equal factors (possible across p-th-root branches) and sort.
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) { return a.factor < b.factor; });
  std::vector<FpFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  return merged;
}

}  // namespace weilcensus
