#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/weil_poly.hpp"

using namespace weilcensus;

namespace {

// Weil polynomials used across the property tests.
std::vector<WeilPolynomial> samples() {
  return {
      WeilPolynomial::validate(2, {2, 0, 1}),
      WeilPolynomial::validate(2, {2, 2, 1}),
      WeilPolynomial::validate(3, {3, -3, 1}),
      WeilPolynomial::validate(5, {5, 4, 1}),
      WeilPolynomial::validate(3, {9, 9, 7, 3, 1}),
      WeilPolynomial::validate(2, {4, -4, 4, -2, 1}),
      WeilPolynomial::validate(4, {4, 0, 1}),
      WeilPolynomial::validate(2, {8, 0, 4, 0, 2, 0, 1}),
  };
}

}  // namespace

TEST(WeilValidate, Examples) {
  const auto e = WeilPolynomial::validate(2, {2, 0, 1});
  EXPECT_EQ(e.dimension(), 1u);
  EXPECT_FALSE(WeilPolynomial::violations(2, {2, -3, 1}).empty());
  EXPECT_THROW(WeilPolynomial::validate(2, {2, -3, 1}), ValidationError);
  EXPECT_EQ(WeilPolynomial::validate(7, {1}).dimension(), 0u);
}

TEST(WeilValidate, ErrorPaths) {
  // functional equation broken
  EXPECT_THROW(WeilPolynomial::validate(2, {3, 0, 1}), ValidationError);
  // non-monic
  EXPECT_THROW(WeilPolynomial::validate(2, {4, 0, 2}), ValidationError);
  // odd degree
  EXPECT_THROW(WeilPolynomial::validate(2, {2, 1}), ValidationError);
  // q not a prime power
  EXPECT_THROW(WeilPolynomial::validate(6, {6, 0, 1}), ValidationError);
  try {
    WeilPolynomial::validate(2, {2, -3, 1});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.violations().empty());
  }
}

TEST(PointCount, Examples) {
  const auto e = WeilPolynomial::validate(2, {2, 0, 1});
  EXPECT_EQ(point_count(e, 1), 3);
  EXPECT_EQ(point_count(e, 2), 9);
  EXPECT_EQ(point_count(WeilPolynomial::validate(5, {1}), 4), 1);
  EXPECT_EQ(point_count_sequence(e, 6), (std::vector<BigInt>{3, 9, 9, 9, 33, 81}));
  const auto prod = WeilPolynomial::validate(2, IntPolynomial{2, 0, 1} * IntPolynomial{2, -2, 1});
  EXPECT_EQ(point_count(prod, 1), 3);
  EXPECT_EQ(point_count_sequence(WeilPolynomial::validate(3, {1}), 4), (std::vector<BigInt>(4, 1)));
}

TEST(PointCount, EightTermsMatchRecurrence) {
  const auto e = WeilPolynomial::validate(2, {2, 0, 1});
  EXPECT_EQ(point_count_sequence(e, 8), (std::vector<BigInt>{3, 9, 9, 9, 33, 81, 129, 225}));
  for (std::uint64_t n = 1; n <= 40; ++n) EXPECT_EQ(point_count(e, n), oracle::elliptic_count(0, 2, n));
}

TEST(PointCount, ThreePathsAgreeUpTo64) {
  for (const auto& a : samples()) {
    const auto seq = point_count_sequence(a, 64);
    for (std::uint64_t n = 1; n <= 64; ++n) {
      const BigInt c = point_count(a, n);
      ASSERT_EQ(c, point_count_via_resultant(a, n));
      ASSERT_EQ(c, seq[n - 1]);
      if (n <= 20) ASSERT_EQ(c, oracle::abelian_count(a.ch(), n));
      EXPECT_GT(c, 0);
      EXPECT_TRUE(within_weil_bounds(a.q(), a.dimension(), n, c));
      const BigInt m = 1000003;
      EXPECT_EQ(point_count_mod(a, n, m), ((c % m) + m) % m);
    }
  }
}

TEST(PointCount, MultiplicativeOnProducts) {
  const auto s = samples();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[i].q() != s[j].q()) continue;
      const auto p = product(s[i], s[j]);
      for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_EQ(point_count(p, n), point_count(s[i], n) * point_count(s[j], n));
    }
}

TEST(WeilBounds, ExactAtTheEdges) {
  // (sqrt(2) - 1)^2 = 3 - 2 sqrt 2 ~ 0.17, (sqrt 2 + 1)^2 ~ 5.83
  EXPECT_TRUE(within_weil_bounds(2, 1, 1, 1));
  EXPECT_TRUE(within_weil_bounds(2, 1, 1, 5));
  EXPECT_FALSE(within_weil_bounds(2, 1, 1, 6));
  EXPECT_FALSE(within_weil_bounds(2, 1, 1, 0));
  // even n: bounds are integers and inclusive
  EXPECT_TRUE(within_weil_bounds(2, 1, 2, 1));
  EXPECT_TRUE(within_weil_bounds(2, 1, 2, 9));
  EXPECT_FALSE(within_weil_bounds(2, 1, 2, 10));
}

TEST(RootPowerSums, NewtonIdentities) {
  // T^2 + 2: s_n = -2 s_{n-2}, s_1 = 0, s_2 = -4
  EXPECT_EQ(root_power_sums({2, 0, 1}, 6), (std::vector<BigInt>{0, -4, 0, 8, 0, -16}));
}

TEST(TwoTorsion, FixedPointExamples) {
  const auto a = WeilPolynomial::validate(2, {2, 1, 1});  // ch mod 2 = T^2 + T
  const auto b = WeilPolynomial::validate(3, {3, 1, 1});  // ch mod 2 = T^2 + T + 1
  const auto m = TwoTorsionModule::make(b, {FpPoly(2, {1, 1, 1})});
  EXPECT_EQ(fixed_two_torsion(m, 1), 1);
  EXPECT_EQ(fixed_two_torsion(m, 3), 4);
  const auto c = WeilPolynomial::validate(3, {3, 0, 1});  // T^2 + 1 = (T + 1)^2 mod 2
  const auto cyc = TwoTorsionModule::cyclic(c);
  EXPECT_EQ(fixed_two_torsion(cyc, 2), 4);
  EXPECT_EQ(fixed_two_torsion(cyc, 1), 2);
  const auto split = TwoTorsionModule::make(c, {FpPoly(2, {1, 1}), FpPoly(2, {1, 1})});
  EXPECT_EQ(fixed_two_torsion(split, 1), 4);
  EXPECT_EQ(TwoTorsionModule::cyclic(a).invariant_factors().size(), 1u);
}

TEST(TwoTorsion, RejectsBadFactors) {
  const auto c = WeilPolynomial::validate(3, {3, 0, 1});
  EXPECT_THROW(TwoTorsionModule::make(c, {FpPoly(2, {1, 1, 1})}), ValidationError);
  // not a divisor chain
  const auto d = WeilPolynomial::validate(2, {2, 1, 1});
  EXPECT_THROW(TwoTorsionModule::make(d, {FpPoly(2, {0, 1}), FpPoly(2, {1, 1})}), ValidationError);
}

TEST(TwoTorsion, FixedPointsGrowAlongDivisibility) {
  for (const auto& a : samples()) {
    const auto m = TwoTorsionModule::cyclic(a);
    const BigInt full = power(BigInt(2), 2 * a.dimension());
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const BigInt f = fixed_two_torsion(m, n);
      EXPECT_GE(f, 1);
      EXPECT_EQ(full % f, 0);
      for (std::uint64_t k = 2; k * n <= 24; ++k) EXPECT_EQ(fixed_two_torsion(m, k * n) % f, 0);
    }
  }
}
