#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "orbirr/basket.hpp"
#include "orbirr/fixtures.hpp"

using namespace orbirr;

namespace {

PointBasketEntry point(int s, int a1, int a2, int a3, int n) { return {s, {a1, a2, a3}, n, 1}; }

bool mentions(const ValidationReport& rep, const std::string& text) {
  return std::any_of(rep.items.begin(), rep.items.end(),
                     [&](const Violation& v) { return v.message.find(text) != std::string::npos; });
}

}  // namespace

TEST(ClassifyPoint, IsolatedQuintic) {
  const auto c = classify_point(point(5, 1, 1, 3, 4));
  EXPECT_EQ(c.kind, PointKind::isolated);
  EXPECT_TRUE(c.axes.empty());
}

TEST(ClassifyPoint, NinthWithDissidentAxis) {
  const auto c = classify_point(point(9, 1, 3, 5, 8));
  EXPECT_EQ(c.kind, PointKind::dissident);
  ASSERT_EQ(c.axes.size(), 1u);
  EXPECT_EQ(c.axes[0], (DissidentAxis{1, 3}));
}

TEST(ClassifyPoint, IsolatedThird) { EXPECT_EQ(classify_point(point(3, 1, 1, 1, 2)).kind, PointKind::isolated); }

TEST(ClassifyPoint, SixthHasTwoAxes) {
  const auto c = classify_point(point(6, 1, 2, 3, 1));
  EXPECT_EQ(c.kind, PointKind::dissident);
  EXPECT_EQ(c.axes, (std::vector<DissidentAxis>{{1, 2}, {2, 3}}));
}

TEST(ClassifyPoint, InvalidEntryNamesTheCondition) {
  try {
    classify_point(point(9, 3, 3, 5, 1));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_TRUE(mentions(e.report(), "common divisor"));
  }
  EXPECT_THROW(classify_point(point(6, 3, 1, 1, 1)), ValidationError);
}

TEST(ClassifyPoint, PermutationInvariant) {
  const std::vector<PointBasketEntry> entries = {point(9, 1, 3, 5, 8), point(6, 1, 2, 3, 1), point(5, 1, 1, 3, 4),
                                                 point(10, 1, 4, 5, 3), point(7, 1, 2, 4, 3)};
  for (const auto& p : entries) {
    const auto base = classify_point(p);
    std::vector<int> alphas;
    for (const auto& ax : base.axes) alphas.push_back(ax.alpha);
    std::sort(alphas.begin(), alphas.end());
    auto a = p.a;
    std::sort(a.begin(), a.end());
    do {
      auto q = p;
      q.a = a;
      const auto c = classify_point(q);
      EXPECT_EQ(c.kind, base.kind);
      std::vector<int> got;
      for (const auto& ax : c.axes) {
        got.push_back(ax.alpha);
        EXPECT_EQ(std::gcd(q.a[static_cast<std::size_t>(ax.index)], q.s), ax.alpha);
      }
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, alphas);
    } while (std::next_permutation(a.begin(), a.end()));
  }
}

TEST(WellFormed, Examples) {
  EXPECT_TRUE(is_well_formed({{1, 1, 2, 3, 6}}));
  EXPECT_FALSE(is_well_formed({{2, 2, 2}}));
  EXPECT_FALSE(is_well_formed({{1, 2, 2}}));
  EXPECT_TRUE(is_well_formed({{1, 1, 1, 3, 3, 5, 9}}));
  EXPECT_THROW(is_well_formed({{}}), std::invalid_argument);
}

TEST(WellFormed, PermutationInvariant) {
  for (std::vector<int> w : {std::vector<int>{1, 2, 3, 6}, std::vector<int>{1, 1, 2, 3, 6}, std::vector<int>{2, 3, 4},
                             std::vector<int>{1, 2, 2, 3}}) {
    std::sort(w.begin(), w.end());
    const bool base = is_well_formed({w});
    do {
      EXPECT_EQ(is_well_formed({w}), base);
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST(Validate, GoldenDataIsClean) {
  for (const auto& fx : builtin_fixtures()) {
    const auto rep = validate(resolve(fx));
    EXPECT_TRUE(rep.items.empty()) << fx.name << ": " << rep.to_string();
  }
}

TEST(Validate, CalabiYauNeedsZeroChiO) {
  PolarizedData d;
  d.calabi_yau = true;
  d.chiO = 1;
  const auto rep = validate(d);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(mentions(rep, "calabi_yau requires chiO=0"));
}

TEST(Validate, CurveCoprimality) {
  PolarizedData d;
  d.curves.push_back({9, 3, 1, 0, 1, 0});
  const auto rep = validate(d);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(mentions(rep, "k,r must be coprime"));
  EXPECT_EQ(rep.items.front().location, "curves[0]");
  EXPECT_THROW(require_valid(d), ValidationError);
}

TEST(Validate, HalfCurveNIsOnlyAWarning) {
  PolarizedData d;
  d.curves.push_back({2, 1, make_rat(7, 4), 0, 1, 5});
  const auto rep = validate(d);
  EXPECT_TRUE(rep.ok());
  ASSERT_EQ(rep.items.size(), 1u);
  EXPECT_EQ(rep.items[0].severity, Violation::Severity::warning);
}

TEST(Validate, DissidentCongruenceChecked) {
  PolarizedData d;
  d.points.push_back(point(6, 2, 1, 2, 1));  // gcd(2,2,6)=2
  d.points.push_back(point(9, 3, 1, 1, 1));  // alpha 3 needs 1+1 = 0 mod 3
  const auto rep = validate(d);
  EXPECT_TRUE(mentions(rep, "common divisor"));
  EXPECT_TRUE(mentions(rep, "dissident axis 1"));
}

TEST(Normalize, ReducesIntoRanges) {
  const auto p = normalized(PointBasketEntry{5, {6, -4, 13}, -1, 2});
  EXPECT_EQ(p.a, (std::array<int, 3>{1, 1, 3}));
  EXPECT_EQ(p.n, 4);
  const auto c = normalized(CurveBasketEntry{3, 4, 1, 0, 1, 0});
  EXPECT_EQ(c.k, 1);
}
