#include "weilcensus/finite_field.hpp"

#include "weilcensus/errors.hpp"
#include "weilcensus/integer.hpp"

namespace weilcensus {

namespace {

// Carry-less product of two polynomials over F_2 packed in bits.
std::uint64_t clmul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  while (y) {
    if (y & 1) r ^= x;
    x <<= 1;
    y >>= 1;
  }
  return r;
}

int bit_degree(std::uint64_t x) { return x ? 63 - __builtin_clzll(x) : -1; }

}  // namespace

FiniteField FiniteField::make(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw ContractError("make_field: " + std::to_string(p) + " is not prime");
  if (a < 1) throw ContractError("make_field: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (q > kFieldSizeCap / p) throw ContractError("make_field: p^a exceeds the field-size cap 2^24");
    q *= p;
  }
  if (a == 1) return FiniteField(p, 1, FpPoly(p, {0, 1}));
  // Enumerate the non-leading coefficients in increasing base-p order, most
  // significant digit being the highest-degree coefficient.
  std::vector<std::uint64_t> c(a + 1, 0);
  c[a] = 1;
  for (std::uint64_t code = 0; code < q; ++code) {
    std::uint64_t r = code;
    for (int i = static_cast<int>(a) - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = r % p;
      r /= p;
    }
    FpPoly f(p, c);
    if (f.coeff(0) != 0 && is_irreducible(f)) return FiniteField(p, a, f);
  }
  throw TheoremCheckFailure("make_field: no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint64_t p, unsigned a, FpPoly modulus)
    : p_(p), a_(a), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < a; ++i) q_ *= p;
  low_.assign(a, 0);
  for (unsigned i = 0; i < a; ++i) low_[i] = modulus_.coeff(i);
  if (p == 2)
    for (unsigned i = 0; i <= a; ++i)
      if (modulus_.coeff(i)) mod_bits_ |= std::uint64_t{1} << i;

  if (a > 1 && q_ <= (std::uint64_t{1} << 16)) {
    // Find a generator of the multiplicative group, then tabulate.
    const std::uint64_t order = q_ - 1;
    std::vector<std::uint64_t> primes;
    for (const auto& [r, e] : factor_integer(BigInt(std::to_string(order)))) {
      (void)e;
      primes.push_back(r.get_ui());
    }
    auto slow_pow = [&](Element x, std::uint64_t e) {
      Element r = 1;
      while (e) {
        if (e & 1) r = mul_slow(r, x);
        x = mul_slow(x, x);
        e >>= 1;
      }
      return r;
    };
    Element gen = 0;
    for (Element cand = 2; cand < q_; ++cand) {
      bool ok = true;
      for (auto r : primes)
        if (slow_pow(cand, order / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = cand;
        break;
      }
    }
    if (gen == 0) throw TheoremCheckFailure("finite field: no multiplicative generator");
    auto lg = std::make_shared<std::vector<Element>>(q_, 0);
    auto ex = std::make_shared<std::vector<Element>>(order, 0);
    Element cur = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
      (*ex)[k] = cur;
      (*lg)[cur] = static_cast<Element>(k);
      cur = mul_slow(cur, gen);
    }
    log_ = lg;
    exp_ = ex;
  }
}

std::vector<std::uint64_t> FiniteField::digits(Element x) const {
  std::vector<std::uint64_t> d(a_, 0);
  for (unsigned i = 0; i < a_; ++i) {
    d[i] = x % p_;
    x = static_cast<Element>(x / p_);
  }
  return d;
}

FiniteField::Element FiniteField::from_digits(const std::vector<std::uint64_t>& d) const {
  std::uint64_t r = 0;
  for (std::size_t i = std::min<std::size_t>(d.size(), a_); i-- > 0;) r = r * p_ + d[i] % p_;
  return static_cast<Element>(r);
}

FiniteField::Element FiniteField::add(Element x, Element y) const {
  if (p_ == 2) return x ^ y;
  if (a_ == 1) return static_cast<Element>((std::uint64_t{x} + y) % p_);
  std::uint64_t r = 0, scale = 1;
  while (x || y) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x = static_cast<Element>(x / p_);
    y = static_cast<Element>(y / p_);
    scale *= p_;
  }
  return static_cast<Element>(r);
}

FiniteField::Element FiniteField::sub(Element x, Element y) const {
  if (p_ == 2) return x ^ y;
  if (a_ == 1) return static_cast<Element>((std::uint64_t{x} + p_ - y) % p_);
  std::uint64_t r = 0, scale = 1;
  while (x || y) {
    r += ((x % p_ + p_ - y % p_) % p_) * scale;
    x = static_cast<Element>(x / p_);
    y = static_cast<Element>(y / p_);
    scale *= p_;
  }
  return static_cast<Element>(r);
}

FiniteField::Element FiniteField::mul_slow(Element x, Element y) const {
  if (p_ == 2) {
    std::uint64_t r = clmul(x, y);
    for (int k = bit_degree(r); k >= static_cast<int>(a_); --k)
      if (r >> k & 1) r ^= mod_bits_ << (k - static_cast<int>(a_));
    return static_cast<Element>(r);
  }
  const auto dx = digits(x), dy = digits(y);
  std::vector<std::uint64_t> prod(2 * a_ - 1, 0);
  for (unsigned i = 0; i < a_; ++i) {
    if (!dx[i]) continue;
    for (unsigned j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
  }
  for (std::size_t k = prod.size(); k-- > a_;) {
    const std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < a_; ++i) prod[k - a_ + i] = (prod[k - a_ + i] + (p_ - c) * low_[i]) % p_;
  }
  prod.resize(a_);
  return from_digits(prod);
}

FiniteField::Element FiniteField::mul(Element x, Element y) const {
  if (x == 0 || y == 0) return 0;
  if (a_ == 1) return static_cast<Element>(std::uint64_t{x} * y % p_);
  if (log_) {
    std::uint64_t k = std::uint64_t{(*log_)[x]} + (*log_)[y];
    if (k >= q_ - 1) k -= q_ - 1;
    return (*exp_)[k];
  }
  return mul_slow(x, y);
}

FiniteField::Element FiniteField::inv_binary(Element x) const {
  // Extended Euclid over F_2[T] on bit masks: track s with s*x = r mod modulus.
  std::uint64_t r0 = mod_bits_, r1 = x, s0 = 0, s1 = 1;
  while (r1 != 1) {
    if (r1 == 0) throw ContractError("finite field: zero has no inverse");
    int shift = bit_degree(r0) - bit_degree(r1);
    if (shift < 0) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      shift = -shift;
    }
    r0 ^= r1 << shift;
    s0 ^= s1 << shift;
    if (bit_degree(r0) < bit_degree(r1)) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  // s1 may exceed degree a; reduce.
  for (int k = bit_degree(s1); k >= static_cast<int>(a_); --k)
    if (s1 >> k & 1) s1 ^= mod_bits_ << (k - static_cast<int>(a_));
  return static_cast<Element>(s1);
}

FiniteField::Element FiniteField::inv(Element x) const {
  if (x == 0) throw ContractError("finite field: zero has no inverse");
  if (a_ == 1) return static_cast<Element>(inv_mod(x, p_));
  if (log_) return (*exp_)[((q_ - 1) - (*log_)[x]) % (q_ - 1)];
  if (p_ == 2) return inv_binary(x);
  return pow(x, q_ - 2);
}

FiniteField::Element FiniteField::pow(Element x, std::uint64_t e) const {
  Element r = 1;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

}  // namespace weilcensus
