#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "weilcensus/curve_zeta.hpp"
#include "weilcensus/errors.hpp"

using namespace weilcensus;

namespace {

CurveSpec elliptic(std::uint64_t q, std::array<std::uint64_t, 5> a) {
  CurveSpec c;
  c.q = q;
  c.weierstrass = WeierstrassModel{a};
  return c;
}

CurveSpec hyperelliptic(std::uint64_t q, std::vector<std::uint64_t> f, std::vector<std::uint64_t> h) {
  CurveSpec c;
  c.q = q;
  c.hyperelliptic = HyperellipticModel{std::move(f), std::move(h)};
  return c;
}

std::vector<int> as_int(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(FiniteField, ModulusExamples) {
  EXPECT_EQ(make_field(2, 1).modulus(), FpPoly(2, {0, 1}));
  EXPECT_EQ(make_field(2, 2).modulus(), FpPoly(2, {1, 1, 1}));
  EXPECT_EQ(make_field(3, 2).modulus(), FpPoly(3, {1, 0, 1}));
}

TEST(FiniteField, ErrorPaths) {
  EXPECT_THROW(make_field(4, 1), ContractError);
  EXPECT_THROW(make_field(2, 25), ContractError);
  EXPECT_THROW(make_field(5, 11), ContractError);
}

TEST(FiniteField, FieldAxiomsOnSamples) {
  std::mt19937_64 rng(201);
  for (auto [p, a] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 4}, {3, 3}, {5, 2}, {7, 2}, {2, 17}, {3, 11}, {2, 20}}) {
    const auto k = make_field(p, a);
    EXPECT_TRUE(is_irreducible(k.modulus()));
    EXPECT_EQ(k.size(), static_cast<std::uint64_t>(std::pow(p, a)));
    for (int t = 0; t < 300; ++t) {
      const auto x = static_cast<FiniteField::Element>(rng() % k.size());
      const auto y = static_cast<FiniteField::Element>(rng() % k.size());
      const auto z = static_cast<FiniteField::Element>(rng() % k.size());
      EXPECT_EQ(k.mul(x, k.add(y, z)), k.add(k.mul(x, y), k.mul(x, z)));
      EXPECT_EQ(k.mul(k.mul(x, y), z), k.mul(x, k.mul(y, z)));
      EXPECT_EQ(k.add(x, k.neg(x)), 0u);
      if (x) EXPECT_EQ(k.mul(x, k.inv(x)), 1u);
      EXPECT_EQ(k.pow(x, k.size()), x);
      EXPECT_EQ(k.from_digits(k.digits(x)), x);
    }
  }
}

TEST(FiniteField, MatchesIndependentFieldOracle) {
  // Same modulus rule, so encodings agree element by element.
  for (auto [p, a] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {2, 5}, {3, 3}}) {
    const auto k = make_field(static_cast<std::uint64_t>(p), static_cast<unsigned>(a));
    const oracle::SmallField o(p, a);
    for (int x = 0; x < o.size(); ++x)
      for (int y = 0; y < o.size(); ++y) {
        ASSERT_EQ(static_cast<int>(k.mul(static_cast<FiniteField::Element>(x), static_cast<FiniteField::Element>(y))), o.mul(x, y));
        ASSERT_EQ(static_cast<int>(k.add(static_cast<FiniteField::Element>(x), static_cast<FiniteField::Element>(y))), o.add(x, y));
      }
  }
}

TEST(BruteForce, Examples) {
  const auto e = elliptic(2, {0, 0, 1, 0, 0});
  EXPECT_EQ(brute_force_count(e, 1), 3);
  EXPECT_EQ(brute_force_count(e, 2), 9);
  // the same curve over F_4 (coefficients in F_2 embed as themselves)
  EXPECT_EQ(brute_force_count(elliptic(4, {0, 0, 1, 0, 0}), 1), 9);
  EXPECT_EQ(brute_force_count(elliptic(4, {0, 0, 1, 0, 0}), 3), brute_force_count(e, 6));
}

TEST(BruteForce, GenusTwoOverF3RoundTrip) {
  // y^2 = x^5 - x + 1
  const auto c = hyperelliptic(3, {1, 2, 0, 0, 0, 1}, {});
  EXPECT_EQ(model_genus(3, *c.hyperelliptic), 2u);
  const std::vector<BigInt> n = {brute_force_count(c, 1), brute_force_count(c, 2)};
  EXPECT_EQ(n, (std::vector<BigInt>{7, 15}));
  const auto z = zeta_from_counts(3, 2, n);
  EXPECT_EQ(z.weil.ch(), (IntPolynomial{9, 9, 7, 3, 1}));
  for (std::uint64_t k = 1; k <= 8; ++k) EXPECT_EQ(curve_count(z, k), brute_force_count(c, k));
}

TEST(BruteForce, SingularModelRejected) {
  // x^5 + x + 1 = (x - 1)^2 (...) over F_3
  EXPECT_THROW(model_genus(3, HyperellipticModel{{1, 1, 0, 0, 0, 1}, {}}), ValidationError);
  // y^2 = x^3 is singular in every characteristic
  EXPECT_THROW(brute_force_count(elliptic(5, {0, 0, 0, 0, 0}), 1), ValidationError);
  EXPECT_THROW(brute_force_count(elliptic(2, {0, 0, 0, 0, 1}), 1), ValidationError);
}

TEST(BruteForce, ErrorPaths) {
  const auto e = elliptic(2, {0, 0, 1, 0, 0});
  EnumerationOptions small;
  small.cap = 64;
  EXPECT_NO_THROW(brute_force_count(e, 6, small));
  EXPECT_THROW(brute_force_count(e, 7, small), ContractError);
  CurveSpec bare;
  bare.q = 5;
  bare.genus = 1;
  EXPECT_THROW(brute_force_count(bare, 1), ContractError);
  EXPECT_THROW(brute_force_count(elliptic(6, {0, 0, 1, 0, 0}), 1), ContractError);
}

TEST(BruteForce, MatchesDoubleLoopOracleOnRandomModels) {
  std::mt19937_64 rng(202);
  int checked = 0;
  for (int p : {2, 3, 5, 7}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t df = 3 + rng() % 4;  // degree 3..6
      std::vector<std::uint64_t> f(df + 1), h;
      for (auto& x : f) x = rng() % static_cast<std::uint64_t>(p);
      f.back() = 1 + rng() % static_cast<std::uint64_t>(p - 1);
      if (p == 2 || rng() % 3 == 0) {
        h.resize(1 + rng() % 3);
        for (auto& x : h) x = rng() % static_cast<std::uint64_t>(p);
      }
      const auto c = hyperelliptic(static_cast<std::uint64_t>(p), f, h);
      try {
        model_genus(c.q, *c.hyperelliptic);
      } catch (const ValidationError&) {
        continue;
      }
      const int n_max = p == 2 ? 6 : (p == 3 ? 4 : 2);
      for (int n = 1; n <= n_max; ++n)
        ASSERT_EQ(brute_force_count(c, static_cast<std::uint64_t>(n)),
                  oracle::curve_points(p, n, as_int(f), as_int(h)))
            << "p=" << p << " n=" << n;
      ++checked;
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(BruteForce, IndependentOfWorkerCount) {
  const auto c = hyperelliptic(3, {1, 2, 0, 0, 0, 1}, {});
  EnumerationOptions one, many;
  one.threads = 1;
  many.threads = 5;
  for (std::uint64_t n = 1; n <= 9; ++n) EXPECT_EQ(brute_force_count(c, n, one), brute_force_count(c, n, many));
}

TEST(ZetaFromCounts, Examples) {
  EXPECT_EQ(zeta_from_counts(2, 1, {3}).weil.ch(), (IntPolynomial{2, 0, 1}));
  EXPECT_EQ(zeta_from_counts(2, 1, {5}).weil.ch(), (IntPolynomial{2, 2, 1}));
  EXPECT_THROW(zeta_from_counts(2, 1, {6}), ValidationError);
  // too few counts
  EXPECT_THROW(zeta_from_counts(3, 2, {7}), ContractError);
  // extra counts are checked for consistency
  EXPECT_NO_THROW(zeta_from_counts(3, 2, {7, 15, 19, 83}));
  EXPECT_THROW(zeta_from_counts(3, 2, {7, 15, 19, 84}), ValidationError);
}

TEST(ZetaFromCounts, RoundTripOnWeilPolynomials) {
  for (const auto& [q, ch] : std::vector<std::pair<int, IntPolynomial>>{
           {2, {2, 0, 1}}, {3, {3, 2, 1}}, {5, {5, -4, 1}}, {3, {9, 9, 7, 3, 1}}, {2, {4, -4, 4, -2, 1}}}) {
    const auto w = WeilPolynomial::validate(q, ch);
    const unsigned g = w.dimension();
    const auto s = root_power_sums(ch, g);
    std::vector<BigInt> counts;
    for (unsigned m = 1; m <= g; ++m) counts.push_back(power(BigInt(q), m) + 1 - s[m - 1]);
    const auto z = zeta_from_counts(q, g, counts);
    EXPECT_EQ(z.weil, w);
    EXPECT_EQ(z.point_counts, counts);
  }
}

TEST(ZetaData, ModelAndCountsCrossChecked) {
  auto c = elliptic(2, {0, 0, 1, 0, 0});
  EXPECT_EQ(zeta_data(c).weil.ch(), (IntPolynomial{2, 0, 1}));
  c.point_counts = {3, 9};
  EXPECT_NO_THROW(zeta_data(c));
  c.point_counts = {5};
  EXPECT_THROW(zeta_data(c), ValidationError);
  auto d = elliptic(2, {0, 0, 1, 0, 0});
  d.l_polynomial = IntPolynomial{1, 0, 2};
  EXPECT_NO_THROW(zeta_data(d));
  d.genus = 2;
  EXPECT_THROW(zeta_data(d), ContractError);
}

TEST(ZetaData, LPolynomialConversion) {
  const auto w = WeilPolynomial::validate(3, {9, 9, 7, 3, 1});
  EXPECT_EQ(l_polynomial(w), (IntPolynomial{1, 3, 7, 9, 9}));
  EXPECT_EQ(weil_from_l_polynomial(3, l_polynomial(w)), w);
  EXPECT_THROW(weil_from_l_polynomial(3, {2, 3, 7, 9, 9}), ContractError);
}

TEST(JacobianCount, Examples) {
  EXPECT_EQ(jacobian_count(elliptic(2, {0, 0, 1, 0, 0}), 3), 9);
  CurveSpec zero;
  zero.q = 7;
  zero.genus = 0;
  for (std::uint64_t n = 1; n <= 5; ++n) EXPECT_EQ(jacobian_count(zero, n), 1);
  CurveSpec synth;
  synth.q = 2;
  synth.weil_polynomial = IntPolynomial{2, 0, 1} * IntPolynomial{2, -2, 1};
  EXPECT_EQ(jacobian_count(synth, 1), 3);
}

TEST(JacobianCount, WeilSandwichOnModels) {
  for (const auto& c : {elliptic(2, {1, 0, 0, 0, 1}), elliptic(3, {0, 0, 0, 2, 1}), elliptic(5, {0, 0, 0, 1, 1}),
                        hyperelliptic(3, {1, 2, 0, 0, 0, 1}, {}), hyperelliptic(2, {0, 0, 0, 0, 0, 1}, {1})}) {
    const auto z = zeta_data(c);
    for (std::uint64_t n = 1; n <= 30; ++n) EXPECT_TRUE(within_weil_bounds(z.q, z.genus, n, jacobian_count(z, n)));
  }
}
