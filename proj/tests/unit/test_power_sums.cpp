#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "weilcensus/dihedral_curves.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/power_sums.hpp"

using namespace weilcensus;

namespace {

std::vector<Rational> rat(const std::vector<BigInt>& v) { return {v.begin(), v.end()}; }

std::vector<Rational> generate(std::size_t n, const std::function<BigInt(unsigned long)>& f) {
  std::vector<Rational> out;
  for (unsigned long i = 1; i <= n; ++i) out.emplace_back(f(i));
  return out;
}

const WeilPolynomial& e2() {
  static const auto w = WeilPolynomial::validate(2, {2, 0, 1});
  return w;
}

}  // namespace

TEST(Fit, Examples) {
  const auto c = fit_recurrence(std::vector<Rational>(6, 3));
  ASSERT_TRUE(c.fits());
  EXPECT_EQ(c.formula->k, 1u);
  EXPECT_EQ(c.formula->min_poly, (IntPolynomial{-1, 1}));
  EXPECT_EQ(c.formula->terms[0].coeffs, (std::vector<Rational>{3}));

  // Eight terms of an order-4 sequence have the same complexity profile as
  // generic data, so the default rule asks for more; with the order bound 4
  // known in advance the eight terms determine the formula.
  const auto eight = point_count_sequence(e2(), 8);
  EXPECT_FALSE(fit_recurrence(eight).fits());
  FitOptions bounded;
  bounded.max_order = 4;
  const auto e = fit_recurrence(eight, bounded);
  ASSERT_TRUE(e.fits());
  EXPECT_EQ(e.formula->k, 4u);
  EXPECT_EQ(e.formula->min_poly, IntPolynomial({-1, 1}) * IntPolynomial({-2, 1}) * IntPolynomial({2, 0, 1}));

  const auto p = fit_recurrence(std::vector<BigInt>{1, 2, 4, 8});
  ASSERT_TRUE(p.fits());
  EXPECT_EQ(p.formula->min_poly, (IntPolynomial{-2, 1}));
  EXPECT_EQ(evaluate(*p.formula, 10), Rational(512));
}

TEST(Fit, RepeatedRootsReported) {
  const auto s = generate(12, [](unsigned long n) -> BigInt { return BigInt(n) * power(BigInt(2), n); });
  const auto r = fit_recurrence(s);
  EXPECT_FALSE(r.fits());
  EXPECT_EQ(r.linear_complexity, 2u);
  EXPECT_NE(r.reason.find("polynomial coefficients present"), std::string::npos);
}

TEST(Fit, ZeroRootRejected) {
  // 0, 1, 1, 1, ... satisfies a(n+1) = a(n) only from n = 2 on
  std::vector<Rational> s{0, 1, 1, 1, 1, 1, 1, 1};
  EXPECT_FALSE(fit_recurrence(s).fits());
}

TEST(Fit, InsufficientConfirmation) {
  // 2^n for n <= 3 followed by a break: complexity jumps at the end
  std::vector<Rational> s{2, 4, 8, 16, 32, 65};
  const auto r = fit_recurrence(s);
  EXPECT_FALSE(r.fits());
  EXPECT_THROW(fit_recurrence(std::vector<Rational>{1}), ContractError);
}

TEST(Fit, OrderBoundedMode) {
  std::vector<Rational> s{1, 2, 4, 8};
  FitOptions opt;
  opt.max_order = 2;
  EXPECT_TRUE(fit_recurrence(s, opt).fits());
  opt.max_order = 3;
  EXPECT_FALSE(fit_recurrence(s, opt).fits());
}

TEST(Fit, RandomPowerSumsRecovered) {
  std::mt19937_64 rng(401);
  for (int t = 0; t < 60; ++t) {
    std::vector<std::pair<long, long>> terms;  // (mu, m)
    const int k = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(terms.size()) < k) {
      long mu = static_cast<long>(rng() % 13) - 6;
      long m = static_cast<long>(rng() % 9) - 4;
      if (mu == 0 || m == 0) continue;
      bool dup = false;
      for (auto& [u, w] : terms) dup |= u == mu;
      if (!dup) terms.emplace_back(mu, m);
    }
    const auto seq = generate(3 * k + 4, [&](unsigned long n) -> BigInt {
      BigInt s = 0;
      for (auto [mu, m] : terms) s += m * power(BigInt(mu), n);
      return s;
    });
    const auto r = fit_recurrence(seq);
    ASSERT_TRUE(r.fits()) << r.reason;
    EXPECT_EQ(r.formula->k, static_cast<std::size_t>(k));
    for (unsigned long n = 1; n <= 40; ++n) {
      BigInt s = 0;
      for (auto [mu, m] : terms) s += m * power(BigInt(mu), n);
      EXPECT_EQ(evaluate(*r.formula, n), Rational(s));
    }
    EXPECT_TRUE(prefix_determinacy_check(*r.formula, seq));
  }
}

TEST(Fit, UniqueOnRefits) {
  const auto seq = rat(point_count_sequence(e2(), 24));
  const auto a = fit_recurrence(seq);
  const auto b = fit_recurrence(std::vector<Rational>(seq.begin(), seq.begin() + 12));
  ASSERT_TRUE(a.fits());
  ASSERT_TRUE(b.fits());
  EXPECT_EQ(*a.formula, *b.formula);
}

TEST(Fit, WeilSequencesHaveWeightRoots) {
  for (const auto& w : {e2(), WeilPolynomial::validate(3, {9, 9, 7, 3, 1}), WeilPolynomial::validate(2, {4, -4, 4, -2, 1})}) {
    const std::size_t len = std::size_t{1} << (2 * w.dimension() + 1);
    const auto seq = rat(point_count_sequence(w, len + 16));
    FitOptions opt;
    opt.max_order = len / 2;  // at most 2^{2g} distinct subset products of the roots
    const auto r = fit_recurrence(std::vector<Rational>(seq.begin(), seq.begin() + static_cast<long>(len)), opt);
    ASSERT_TRUE(r.fits()) << r.reason;
    for (std::size_t n = 1; n <= seq.size(); ++n) EXPECT_EQ(evaluate(*r.formula, n), seq[n - 1]);
    const auto rep = detect_lefschetz(std::vector<Rational>(seq.begin(), seq.begin() + static_cast<long>(len)), w.q(), 2, opt);
    EXPECT_TRUE(rep.fits);
    for (const auto& e : rep.weight_table) EXPECT_TRUE(e.weight.has_value()) << e.root;
  }
}

TEST(Prefix, Examples) {
  const auto seq = rat(point_count_sequence(e2(), 24));
  const auto f = fit_recurrence(seq).formula;
  ASSERT_TRUE(f);
  EXPECT_TRUE(prefix_determinacy_check(*f, std::vector<Rational>(seq.begin(), seq.begin() + 8)));
  const std::vector<Rational> c(2, 5);
  const auto fc = fit_recurrence(std::vector<Rational>(6, 5)).formula;
  EXPECT_TRUE(prefix_determinacy_check(*fc, c));
  // perturb term 2k + 1: the prefix still fits, the whole sequence no longer does
  auto bad = seq;
  bad[8] += 1;
  FitOptions bounded;
  bounded.max_order = 4;
  const auto pre = fit_recurrence(std::vector<Rational>(bad.begin(), bad.begin() + 8), bounded);
  ASSERT_TRUE(pre.fits());
  EXPECT_FALSE(prefix_determinacy_check(*pre.formula, bad));
  EXPECT_FALSE(fit_recurrence(bad).fits());
}

TEST(Lefschetz, DrinfeldShape) {
  const auto s = generate(16, [](unsigned long n) -> BigInt { return power(BigInt(2), 5 * n) + 2 * power(BigInt(2), n); });
  const auto r = detect_lefschetz(s, 2, 2);
  EXPECT_TRUE(r.fits);
  EXPECT_TRUE(r.drinfeld_shape);
  EXPECT_EQ(r.k, 2u);
  // leading coefficient 2 breaks the shape
  const auto t = generate(16, [](unsigned long n) -> BigInt { return 2 * power(BigInt(2), 5 * n) + power(BigInt(2), n); });
  EXPECT_FALSE(detect_lefschetz(t, 2, 2).drinfeld_shape);
  // a root of weight 10 (= 2(4g - 3)) besides the leading one breaks the window
  const auto u = generate(16, [](unsigned long n) -> BigInt { return power(BigInt(2), 5 * n) + power(BigInt(-32), n); });
  EXPECT_FALSE(detect_lefschetz(u, 2, 2).drinfeld_shape);
  // a root that is not a Weil number of any weight
  const auto v = generate(16, [](unsigned long n) -> BigInt { return power(BigInt(2), 5 * n) + power(BigInt(3), n); });
  const auto rv = detect_lefschetz(v, 2, 2);
  EXPECT_TRUE(rv.fits);
  EXPECT_FALSE(rv.drinfeld_shape);
}

TEST(Lefschetz, RepeatedRootsDoNotFit) {
  const auto s = generate(12, [](unsigned long n) -> BigInt { return BigInt(n) * power(BigInt(2), n); });
  const auto r = detect_lefschetz(s, 2, 2);
  EXPECT_FALSE(r.fits);
  EXPECT_FALSE(r.drinfeld_shape);
}

TEST(Lefschetz, CensusSeriesFitsWithLeadingRootEight) {
  const IntPolynomial base = IntPolynomial{2, 0, 1} * IntPolynomial{2, -2, 1};
  CurveSpec c;
  c.q = 2;
  c.weil_polynomial = base;
  const auto in = DihedralCensusInput::make(
      zeta_data(c), {BetaRecord{"b", 1, 2, WeilPolynomial::validate(2, base * IntPolynomial{2, 2, 1})}});
  std::vector<Rational> adic, mod;
  for (std::uint64_t n = 1; n <= 100; ++n) {
    adic.emplace_back(census_ell_adic(in, n));
    mod.emplace_back(census_mod_ell(in, 3, n));
  }
  const auto r = fit_recurrence(adic);
  ASSERT_TRUE(r.fits()) << r.reason;
  bool has8 = false;
  for (const auto& t : r.formula->terms) has8 |= t.factor == IntPolynomial({-8, 1});
  EXPECT_TRUE(has8);
  EXPECT_FALSE(fit_recurrence(mod).fits());
}
