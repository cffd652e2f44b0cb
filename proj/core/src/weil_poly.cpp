#include "weilcensus/weil_poly.hpp"

#include <cmath>

#include "weilcensus/complex_roots.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/matrix.hpp"
#include "weilcensus/rational_factor.hpp"

namespace weilcensus {

WeilPolynomial::WeilPolynomial(BigInt q, IntPolynomial ch)
    : q_(std::move(q)), ch_(std::move(ch)), dimension_(static_cast<unsigned>(ch_.degree() / 2)) {}

std::vector<std::string> WeilPolynomial::violations(const BigInt& q, const IntPolynomial& ch) {
  std::vector<std::string> out;
  if (q < 2 || prime_power_decomposition(q).first == 0) out.push_back("q = " + q.get_str() + " is not a prime power");
  if (ch.is_zero() || !ch.is_monic()) {
    out.push_back("polynomial is not monic");
    return out;
  }
  if (ch.degree() % 2 != 0) {
    out.push_back("degree " + std::to_string(ch.degree()) + " is odd");
    return out;
  }
  if (!out.empty()) return out;
  const auto g = static_cast<unsigned long>(ch.degree() / 2);

  // T^{2g} ch(q/T) = q^g ch(T): c_m = q^{g-m} c_{2g-m} for m <= g.
  for (unsigned long m = 0; m < g; ++m) {
    if (ch.coeff(m) != power(q, g - m) * ch.coeff(2 * g - m)) {
      out.push_back("functional equation fails at T^" + std::to_string(m) + ": coefficient " +
                    ch.coeff(m).get_str() + " != q^" + std::to_string(g - m) + " * " +
                    ch.coeff(2 * g - m).get_str());
    }
  }
  if (ch.eval(BigInt(1)) <= 0) out.push_back("ch(1) = " + ch.eval(BigInt(1)).get_str() + " is not positive");

  if (g > 0) {
    const long double qd = std::stold(q.get_str());
    for (const auto& [factor, mult] : factor_over_q(ch)) {
      (void)mult;
      for (const auto& root : complex_roots(factor)) {
        const long double dev = std::fabs(root.modulus_squared - qd);
        if (dev > kWeilModulusTolerance) {
          out.push_back("root " + root.re_text + " + " + root.im_text + "i of " + factor.to_string() +
                        " has |alpha|^2 != q");
          break;
        }
      }
    }
  }
  return out;
}

WeilPolynomial WeilPolynomial::validate(const BigInt& q, const IntPolynomial& ch) {
  auto v = violations(q, ch);
  if (!v.empty()) throw ValidationError(std::move(v));
  return WeilPolynomial(q, ch);
}

BigInt point_count(const WeilPolynomial& a, std::uint64_t n) {
  if (n < 1) throw ContractError("point_count: n must be >= 1");
  if (a.dimension() == 0) return 1;
  const IntMatrix c = companion_matrix(a.ch());
  IntMatrix m = matrix_power(c, BigInt(std::to_string(n)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (i == j ? 1 : 0) - m(i, j);
  return determinant(m);
}

BigInt point_count_via_resultant(const WeilPolynomial& a, std::uint64_t n) {
  if (n < 1) throw ContractError("point_count: n must be >= 1");
  if (a.dimension() == 0) return 1;
  IntPolynomial g = IntPolynomial::constant(1) - IntPolynomial::monomial(1, n);
  return resultant(a.ch(), g);
}

BigInt point_count_mod(const WeilPolynomial& a, const BigInt& n, const BigInt& modulus) {
  if (n < 1) throw ContractError("point_count: n must be >= 1");
  if (a.dimension() == 0) return BigInt(1 % modulus);
  IntMatrix m = matrix_power_mod(companion_matrix(a.ch()), n, modulus);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (i == j ? 1 : 0) - m(i, j);
  BigInt d = determinant(m);
  mpz_mod(d.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
  return d;
}

std::vector<BigInt> point_count_sequence(const WeilPolynomial& a, std::size_t n_max) {
  if (n_max < 1) throw ContractError("point_count_sequence: n_max must be >= 1");
  std::vector<BigInt> out;
  out.reserve(n_max);
  if (a.dimension() == 0) return std::vector<BigInt>(n_max, BigInt(1));
  // Incremental powers of the companion matrix.
  const IntMatrix c = companion_matrix(a.ch());
  IntMatrix pw = c;
  for (std::size_t n = 1; n <= n_max; ++n) {
    IntMatrix m = pw;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (i == j ? 1 : 0) - m(i, j);
    out.push_back(determinant(m));
    pw = pw * c;
  }
  return out;
}

std::vector<BigInt> root_power_sums(const IntPolynomial& monic, std::size_t m_max) {
  if (!monic.is_monic()) throw ContractError("root_power_sums: polynomial must be monic");
  const auto d = static_cast<std::size_t>(monic.degree());
  // e_k from coefficients: monic = T^d - e1 T^{d-1} + e2 T^{d-2} - ...
  std::vector<BigInt> e(d + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) e[k] = (k % 2 ? -1 : 1) * monic.coeff(d - k);
  std::vector<BigInt> s(m_max + 1);
  for (std::size_t m = 1; m <= m_max; ++m) {
    BigInt acc = 0;
    for (std::size_t i = 1; i < m && i <= d; ++i) acc += ((i - 1) % 2 ? -1 : 1) * e[i] * s[m - i];
    if (m <= d) acc += ((m - 1) % 2 ? -1 : 1) * BigInt(static_cast<unsigned long>(m)) * e[m];
    s[m] = acc;
  }
  s.erase(s.begin());
  return s;
}

WeilPolynomial product(const WeilPolynomial& a, const WeilPolynomial& b) {
  if (a.q() != b.q()) throw ContractError("product: Weil polynomials over different fields");
  return WeilPolynomial::validate(a.q(), a.ch() * b.ch());
}

TwoTorsionModule TwoTorsionModule::cyclic(const WeilPolynomial& a) {
  const FpPoly reduced = poly_mod_prime(a.ch(), 2);
  if (reduced.degree() <= 0) return TwoTorsionModule({});
  return TwoTorsionModule({reduced});
}

TwoTorsionModule TwoTorsionModule::make(const WeilPolynomial& a, std::vector<FpPoly> factors) {
  std::vector<std::string> v;
  FpPoly prod = FpPoly::constant(2, 1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].modulus() != 2) v.push_back("invariant factor " + std::to_string(i) + " is not over F_2");
    if (factors[i].degree() < 1 || factors[i].leading() != 1)
      v.push_back("invariant factor " + std::to_string(i) + " is not monic of positive degree");
    if (i > 0 && !(factors[i] % factors[i - 1]).is_zero())
      v.push_back("invariant factor " + std::to_string(i - 1) + " does not divide factor " + std::to_string(i));
    prod = prod * factors[i];
  }
  if (!(prod == poly_mod_prime(a.ch(), 2)) && !(a.dimension() == 0 && factors.empty()))
    v.push_back("product of invariant factors " + prod.to_string() + " != ch mod 2");
  if (!v.empty()) throw ValidationError(std::move(v));
  return TwoTorsionModule(std::move(factors));
}

BigInt fixed_two_torsion(const TwoTorsionModule& m, std::uint64_t n) {
  if (n < 1) throw ContractError("fixed_two_torsion: n must be >= 1");
  unsigned long dim = 0;
  for (const auto& f : m.invariant_factors()) {
    const FpPoly tn = pow_mod(FpPoly::x(2), BigInt(std::to_string(n)), f);
    const FpPoly g = gcd(f, tn - FpPoly::constant(2, 1));
    dim += static_cast<unsigned long>(std::max(g.degree(), 0));
  }
  return power(BigInt(2), dim);
}

}  // namespace weilcensus

namespace weilcensus {

namespace {

// Sign of x - y sqrt(big_q), big_q >= 0.
int sign_minus_sqrt(const BigInt& x, const BigInt& y, const BigInt& big_q) {
  const int sx = sgn(x), sy = sgn(y);
  if (sy <= 0 && sx >= 0) return (sx == 0 && (sy == 0 || big_q == 0)) ? 0 : 1;
  if (sy >= 0 && sx <= 0) return (sx == 0 && (sy == 0 || big_q == 0)) ? 0 : -1;
  const BigInt lhs = x * x, rhs = y * y * big_q;
  const int c = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return sx > 0 ? c : -c;
}

}  // namespace

bool within_weil_bounds(const BigInt& q, unsigned g, std::uint64_t n, const BigInt& count) {
  const BigInt big_q = power(q, static_cast<unsigned long>(n));
  // (s + t)^{2g} = a + b s with s = sqrt(big_q).
  auto expand = [&](int t) {
    BigInt a = 0, b = 0, binom = 1;
    const unsigned m = 2 * g;
    for (unsigned k = 0; k <= m; ++k) {
      const BigInt sign = ((m - k) % 2 && t < 0) ? -1 : 1;
      if (k % 2 == 0) a += sign * binom * power(big_q, k / 2);
      else b += sign * binom * power(big_q, (k - 1) / 2);
      binom = binom * (m - k) / (k + 1);
    }
    return std::pair<BigInt, BigInt>{a, b};
  };
  const auto [la, lb] = expand(-1);
  const auto [ua, ub] = expand(1);
  return sign_minus_sqrt(count - la, lb, big_q) >= 0 && sign_minus_sqrt(count - ua, ub, big_q) <= 0;
}

}  // namespace weilcensus
