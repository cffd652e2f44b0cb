#include "weilcensus/power_sums.hpp"

#include <cmath>

#include "weilcensus/complex_roots.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/matrix.hpp"
#include "weilcensus/rational_factor.hpp"

namespace weilcensus {

namespace {

// Sums of m-th powers of the roots of f, m = 0..m_max.
std::vector<Rational> root_power_sums_q(const IntPolynomial& f, std::size_t m_max) {
  const auto d = static_cast<std::size_t>(f.degree());
  const Rational lc(f.leading());
  std::vector<Rational> e(d + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) e[k] = Rational((k % 2 ? -1 : 1) * f.coeff(d - k)) / lc;
  std::vector<Rational> p(m_max + 1);
  p[0] = Rational(static_cast<long>(d));
  for (std::size_t m = 1; m <= m_max; ++m) {
    Rational acc = 0;
    for (std::size_t i = 1; i < m && i <= d; ++i) acc += ((i - 1) % 2 ? -1 : 1) * e[i] * p[m - i];
    if (m <= d) acc += ((m - 1) % 2 ? -1 : 1) * Rational(static_cast<long>(m)) * e[m];
    p[m] = acc;
  }
  return p;
}

struct Bm {
  std::vector<Rational> connection;  // 1 + c1 x + ... (length may exceed L + 1)
  std::size_t l = 0;
  std::vector<std::size_t> history;  // linear complexity after each term
};

Bm berlekamp_massey(const std::vector<Rational>& s) {
  Bm out;
  std::vector<Rational> c{1}, b{1};
  std::size_t m = 1;
  Rational last = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational d = s[n];
    for (std::size_t i = 1; i <= out.l && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d == 0) {
      ++m;
    } else {
      const std::vector<Rational> t = c;
      const Rational coef = d / last;
      if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
      for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
      if (2 * out.l <= n) {
        out.l = n + 1 - out.l;
        b = t;
        last = d;
        m = 1;
      } else {
        ++m;
      }
    }
    out.history.push_back(out.l);
  }
  c.resize(out.l + 1, 0);
  out.connection = c;
  return out;
}

// Coefficients r_F solving sum_F sum_t r_{F,t} Tr(mu^{t+n}) = a(n), n = 1..k.
std::vector<PowerSumTerm> solve_coefficients(const std::vector<IntPolynomial>& factors, const std::vector<Rational>& seq,
                                             std::size_t k) {
  std::vector<std::vector<Rational>> traces;
  for (const auto& f : factors) traces.push_back(root_power_sums_q(f, 2 * k + 1));
  RatMatrix a(k, k);
  std::vector<Rational> rhs(k);
  for (std::size_t n = 1; n <= k; ++n) {
    std::size_t col = 0;
    for (std::size_t fi = 0; fi < factors.size(); ++fi)
      for (int t = 0; t < factors[fi].degree(); ++t) a(n - 1, col++) = traces[fi][static_cast<std::size_t>(t) + n];
    rhs[n - 1] = seq[n - 1];
  }
  const auto sol = solve(a, rhs);
  if (!sol) throw TheoremCheckFailure("power-sum coefficient system is singular for distinct nonzero roots");
  std::vector<PowerSumTerm> terms;
  std::size_t col = 0;
  for (const auto& f : factors) {
    PowerSumTerm term{f, {}};
    for (int t = 0; t < f.degree(); ++t) term.coeffs.push_back((*sol)[col++]);
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace

Rational evaluate(const PowerSumFormula& f, std::uint64_t n) {
  Rational total = 0;
  for (const auto& term : f.terms) {
    const auto tr = root_power_sums_q(term.factor, n + term.coeffs.size());
    for (std::size_t t = 0; t < term.coeffs.size(); ++t) total += term.coeffs[t] * tr[t + n];
  }
  return total;
}

FitResult fit_recurrence(const std::vector<Rational>& seq, const FitOptions& opt) {
  if (seq.size() < 2) throw ContractError("fit_recurrence: need at least 2 terms");
  FitResult res;
  const Bm bm = berlekamp_massey(seq);
  const std::size_t l = bm.l;
  res.linear_complexity = l;
  const std::size_t n = seq.size();
  if (opt.max_order) {
    if (n < 2 * *opt.max_order) {
      res.reason = "fewer than 2 * max_order terms";
      return res;
    }
    if (l > *opt.max_order) {
      res.reason = "no recurrence of order <= " + std::to_string(*opt.max_order);
      return res;
    }
  } else {
    if (n < 2 * l) {
      res.reason = "linear complexity " + std::to_string(l) + " needs at least " + std::to_string(2 * l) + " terms";
      return res;
    }
    if (opt.confirmation >= n || bm.history[n - 1 - opt.confirmation] != l) {
      res.reason = "linear complexity did not stabilize (" + std::to_string(l) + " after " + std::to_string(n) +
                   " terms)";
      return res;
    }
  }
  // s(X) = X^L C(1/X).
  std::vector<Rational> s(l + 1);
  for (std::size_t i = 0; i <= l; ++i) s[l - i] = bm.connection[i];
  if (l > 0 && s[0] == 0) {
    res.reason = "minimal polynomial has the root 0";
    return res;
  }
  BigInt den = 1;
  for (const auto& c : s) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  for (const auto& c : s) ints.push_back(BigInt(c * den));
  const IntPolynomial min_poly = IntPolynomial(ints).primitive_part();
  if (!is_squarefree(min_poly)) {
    res.reason = "repeated roots: polynomial coefficients present";
    return res;
  }
  PowerSumFormula f;
  f.min_poly = min_poly;
  f.k = l;
  std::vector<IntPolynomial> factors;
  if (l > 0)
    for (const auto& [fac, mult] : factor_over_q(min_poly)) {
      (void)mult;
      factors.push_back(fac);
    }
  f.terms = solve_coefficients(factors, seq, l);
  for (std::size_t i = 0; i < n; ++i)
    if (evaluate(f, i + 1) != seq[i])
      throw TheoremCheckFailure("fitted power sum does not reproduce term " + std::to_string(i + 1));
  res.formula = std::move(f);
  return res;
}

FitResult fit_recurrence(const std::vector<BigInt>& seq, const FitOptions& opt) {
  std::vector<Rational> r(seq.begin(), seq.end());
  return fit_recurrence(r, opt);
}

bool prefix_determinacy_check(const PowerSumFormula& f, const std::vector<Rational>& seq) {
  const std::size_t two_k = std::max<std::size_t>(2 * f.k, 2);
  if (seq.size() < two_k) throw ContractError("prefix_determinacy_check: need at least 2k terms");
  FitOptions opt;
  opt.max_order = f.k;
  const FitResult refit = fit_recurrence(std::vector<Rational>(seq.begin(), seq.begin() + static_cast<long>(two_k)), opt);
  if (!refit.fits() || !(*refit.formula == f)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (evaluate(f, i + 1) != seq[i]) return false;
  return true;
}

LefschetzReport detect_lefschetz(const std::vector<Rational>& seq, const BigInt& q, unsigned g, const FitOptions& opt,
                                 long double tolerance) {
  LefschetzReport rep;
  rep.tolerance = tolerance;
  const FitResult fit = fit_recurrence(seq, opt);
  rep.fits = fit.fits();
  rep.reason = fit.reason;
  if (!fit.fits()) return rep;
  const PowerSumFormula& f = *fit.formula;
  rep.k = f.k;
  if (g < 1) {
    rep.reason = "genus must be >= 1 for the weight window";
    return rep;
  }
  const unsigned long top_exp = 4ul * g - 3;
  const BigInt top = power(q, top_exp);
  const long double log_q = std::log(std::stold(q.get_str()));
  const long window = 8l * g - 6;  // j/2 < 4g - 3

  bool leading_ok = false, others_ok = true;
  long double best = -1;
  for (const auto& term : f.terms) {
    const bool is_top = term.factor == IntPolynomial({-top, BigInt(1)});
    if (is_top) leading_ok = term.coeffs.size() == 1 && term.coeffs[0] == 1;
    for (const auto& root : complex_roots(term.factor)) {
      WeightEntry w;
      w.factor = term.factor;
      w.root = root.re_text + (root.im < 0 ? " - " : " + ") + (root.im < 0 ? root.im_text.substr(1) : root.im_text) + "i";
      w.modulus = root.modulus;
      if (root.modulus > 0) {
        const long j = std::lround(2 * std::log(root.modulus) / log_q);
        const long double target = std::pow(std::stold(q.get_str()), static_cast<long double>(j) / 2);
        if (std::fabs(root.modulus - target) <= tolerance * target) w.weight = j;
      }
      if (root.modulus > best) {
        best = root.modulus;
        rep.leading_root = w.root + " (root of " + term.factor.to_string('X') + ")";
      }
      if (!is_top && (!w.weight || *w.weight < 0 || *w.weight >= window)) others_ok = false;
      rep.weight_table.push_back(std::move(w));
    }
  }
  rep.drinfeld_shape = leading_ok && others_ok;
  if (!leading_ok) rep.reason = "no root q^{4g-3} with coefficient 1";
  else if (!others_ok) rep.reason = "a non-leading root lies outside the weight window [0, 8g-6)";
  return rep;
}

}  // namespace weilcensus
