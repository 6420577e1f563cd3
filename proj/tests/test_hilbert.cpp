#include <gtest/gtest.h>

#include <random>

#include "orbirr/fixtures.hpp"
#include "orbirr/hilbert.hpp"
#include "orbirr/riemann_roch.hpp"
#include "support/random_basket.hpp"

using namespace orbirr;

namespace {

PointBasketEntry point(int s, int a1, int a2, int a3, int n) { return {s, {a1, a2, a3}, n, 1}; }

}  // namespace

TEST(PointSeries, TrivialWhenNIsZero) {
  EXPECT_TRUE(point_series(point(7, 1, 2, 4, 0)).numerator().is_zero());
}

TEST(PointSeries, Third) {
  const auto rf = point_series(point(3, 1, 1, 1, 2));
  const int w[] = {3};
  const auto expected = RationalFunction::over_weights(Poly({Rat(0), make_rat(1, 9), make_rat(-1, 9)}), w);
  EXPECT_TRUE(rf == expected) << to_string(rf.numerator()) << " / " << to_string(rf.denominator_factors());
  // t(1-t)/9 over 1-t^3 loses its (1-t)
  EXPECT_EQ(rf.reduced().denominator_factors().exponent(1), 0);
}

TEST(PointSeries, CoefficientsArePeriodicContributions) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = orbirr::testing::random_point(rng, 16);
    p.multiplicity = 1 + trial % 3;
    const auto s = series_of(point_series(p), 4 * p.s);
    EXPECT_EQ(s[0], 0);
    for (int m = 1; m <= 4 * p.s; ++m) EXPECT_EQ(s[m], point_contribution(p, m)) << "m=" << m;
  }
}

TEST(CurveSeries, HalfCurve) {
  const CurveBasketEntry c{2, 1, make_rat(7, 4), 0, 2, 0};
  const auto s = series_of(curve_series(c), 20);
  for (int m = 1; m <= 20; ++m) EXPECT_EQ(s[m], curve_contribution(c, m)) << "m=" << m;
  EXPECT_EQ(s[1], make_rat(-7, 16));
}

TEST(CurveSeries, ZeroData) {
  EXPECT_TRUE(curve_series({5, 2, 0, 0, 1, 0}).numerator().is_zero());
}

TEST(CurveSeries, ThirdCurveFirstCoefficient) {
  const auto s = series_of(curve_series({3, 1, make_rat(1, 9), 0, 3, 22}), 3);
  EXPECT_EQ(s[1], make_rat(8, 81));
}

TEST(CurveSeries, RandomCurvesMatchContribution) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = orbirr::testing::random_curve(rng, 12);
    const auto s = series_of(curve_series(c), 3 * c.r + 5);
    for (int m = 1; m <= s.order(); ++m) EXPECT_EQ(s[m], curve_contribution(c, m));
  }
}

TEST(CurveSeries, RejectsCanonicalTerm) {
  EXPECT_THROW(curve_series({3, 1, 1, 1, 1, 0}), std::invalid_argument);
}

TEST(Assemble, CubesForEmptyBasket) {
  PolarizedData d;
  d.calabi_yau = true;
  d.D3 = 6;
  const auto hs = assemble(d);
  const auto s = series_of(hs.closed, 30);
  EXPECT_EQ(s[0], 1);
  for (long m = 1; m <= 30; ++m) EXPECT_EQ(s[static_cast<int>(m)], m * m * m);
  EXPECT_EQ(hs.denominator_weights, (std::vector<int>{1, 1, 1, 1}));
}

TEST(Assemble, RejectsNonCalabiYau) {
  PolarizedData d;
  d.D3 = 6;
  EXPECT_THROW(assemble(d), std::invalid_argument);
}

TEST(Assemble, GoldenSeriesProperties) {
  for (const auto& fx : builtin_fixtures()) {
    const auto data = resolve(fx);
    const auto hs = assemble(data);
    EXPECT_TRUE(hs.closed.denominator_factors().divides(CycloProduct::of_weights(hs.denominator_weights)));
    const RiemannRoch rr(data);
    const auto s = series_of(hs.closed, 200);
    EXPECT_EQ(s[0], 1) << fx.name;
    EXPECT_EQ(s[1], fx.h1);
    EXPECT_EQ(s[2], fx.h2);
    for (int m = 1; m <= 200; ++m) {
      EXPECT_EQ(s[m], rr.value(m)) << fx.name << " m=" << m;
      EXPECT_TRUE(is_integer(s[m]) && s[m] >= 0) << fx.name << " m=" << m;
    }
    EXPECT_FALSE(first_mismatch(hs, 200).has_value());
  }
}

TEST(Assemble, Codim3DenominatorWeights) {
  const auto hs = assemble(resolve(*find_fixture("cy-codim3")));
  EXPECT_EQ(hs.denominator_weights, (std::vector<int>{1, 1, 1, 1, 3, 3, 3, 9}));
}

TEST(Assemble, RandomDataMatchesChi) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const auto data = orbirr::testing::random_cy_data(rng, 14, 9);
    const auto hs = assemble(data);
    EXPECT_TRUE(hs.closed.denominator_factors().divides(CycloProduct::of_weights(hs.denominator_weights)));
    const auto s = series_of(hs.closed, 200);
    const RiemannRoch rr(data);
    for (int m = 1; m <= 200; ++m) ASSERT_EQ(s[m], rr.value(m)) << "trial " << trial << " m=" << m;
  }
}

TEST(FirstMismatch, DetectsTampering) {
  auto hs = assemble(resolve(*find_fixture("cy-codim4")));
  const int w[] = {5};
  hs.closed = hs.closed + RationalFunction::over_weights(Poly::monomial(1, 7), w);
  EXPECT_EQ(first_mismatch(hs, 100), 7);
  auto hs2 = assemble(resolve(*find_fixture("cy-codim4")));
  hs2.closed = hs2.closed + RationalFunction::polynomial(Poly{1});
  EXPECT_EQ(first_mismatch(hs2, 100), 0);
}
