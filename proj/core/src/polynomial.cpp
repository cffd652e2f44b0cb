#include "weilcensus/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "weilcensus/errors.hpp"

namespace weilcensus {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw ContractError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  std::vector<BigInt> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  return IntPolynomial(std::vector<BigInt>(coeffs_.rbegin(), coeffs_.rend()));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      if (i == 0 || mag != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ContractError("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const std::vector<BigInt>& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = bc.back();
  int e = a.degree() - b.degree() + 1;
  for (std::size_t top = r.size(); top-- > db;) {
    const BigInt t = r[top];
    for (auto& x : r) x *= lb;
    if (t != 0) {
      for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= t * bc[j];
    }
    --e;
  }
  // The loop applied one multiplication per step; remaining power is e.
  BigInt scale = power(lb, static_cast<unsigned long>(std::max(e, 0)));
  for (auto& x : r) x *= scale;
  r.resize(db);
  return IntPolynomial(std::move(r));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ContractError("division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t top = r.size(); top-- > db;) {
    if (r[top] == 0) continue;
    if (!mpz_divisible_p(r[top].get_mpz_t(), bc.back().get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), r[top].get_mpz_t(), bc.back().get_mpz_t());
    q[top - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= t * bc[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (!monic.is_monic()) throw ContractError("remainder_monic: divisor must be monic");
  if (a.degree() < monic.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = monic.coeffs();
  const std::size_t db = bc.size() - 1;
  for (std::size_t top = r.size(); top-- > db;) {
    if (r[top] == 0) continue;
    const BigInt t = r[top];
    for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= t * bc[j];
  }
  r.resize(db);
  return IntPolynomial(std::move(r));
}

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero()) throw ContractError("undefined resultant: first argument is the zero polynomial");
  if (g.is_zero()) return 0;
  if (f.degree() == 0) return power(f.leading(), static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return power(g.leading(), static_cast<unsigned long>(f.degree()));

  IntPolynomial a = f, b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
  }
  // Content is pulled out so the PRS runs on primitive inputs.
  const BigInt ca = a.content(), cb = b.content();
  const BigInt t = power(ca, static_cast<unsigned long>(b.degree())) *
                   power(cb, static_cast<unsigned long>(a.degree()));
  {
    std::vector<BigInt> av = a.coeffs(), bv = b.coeffs();
    for (auto& x : av) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ca.get_mpz_t());
    for (auto& x : bv) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cb.get_mpz_t());
    a = IntPolynomial(std::move(av));
    b = IntPolynomial(std::move(bv));
  }

  BigInt gg = 1, h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPolynomial r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return 0;
    const BigInt divisor = gg * power(h, static_cast<unsigned long>(delta));
    std::vector<BigInt> rv = r.coeffs();
    for (auto& x : rv) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    b = IntPolynomial(std::move(rv));
    gg = a.leading();
    // h <- h^{1-delta} * g^delta (exact)
    if (delta == 0) {
      // h unchanged
    } else {
      BigInt num = power(gg, static_cast<unsigned long>(delta));
      BigInt den = power(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(a.degree());
      BigInt num = power(b.leading(), da);
      BigInt hh;
      if (da == 0) {
        hh = h;
      } else {
        BigInt den = power(h, da - 1);
        mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      }
      return BigInt(sign * t * hh);
    }
  }
}

IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  if (a0.is_zero()) return b0.primitive_part();
  if (b0.is_zero()) return a0.primitive_part();
  IntPolynomial a = a0.primitive_part(), b = b0.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = b;
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : IntPolynomial{1};
  const IntPolynomial g = gcd(f, f.derivative());
  auto q = divide_exact(f.primitive_part(), g);
  if (!q) throw TheoremCheckFailure("squarefree_part: gcd does not divide input");
  return q->primitive_part();
}

bool is_squarefree(const IntPolynomial& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace weilcensus
