// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbirr/cli.hpp"
#include "orbirr/embed.hpp"
#include "orbirr/fixtures.hpp"
#include "orbirr/hilbert.hpp"
#include "orbirr/riemann_roch.hpp"
#include "support/float_oracle.hpp"
#include "support/random_basket.hpp"

using namespace orbirr;
using nlohmann::json;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kConsistencySeconds = 60.0;
constexpr int kConsistencyOrder = 200;
constexpr int kRandomBaskets = 200;
constexpr int kIntegralityRange = 100;
constexpr int kOracleSamples = 50;
const orbirr::testing::Real kOracleTolerance("1e-30");
constexpr int kRoundTrips = 500;

struct Verdict {
  bool pass = true;
  std::string detail;
};

Poly sparse(std::initializer_list<std::pair<int, long>> terms) {
  Poly p;
  for (auto [d, c] : terms) p += Poly::monomial(Rat(c), d);
  return p;
}

const Poly kCodim3 =
    sparse({{23, -1}, {17, 1}, {15, 1}, {13, 2}, {12, -1}, {11, 1}, {10, -2}, {8, -1}, {6, -1}, {0, 1}});
const Poly kCodim4 = sparse({{21, 1}, {15, -3}, {14, -3}, {13, -3}, {12, 2}, {11, 6},
                             {10, 6}, {9, 2},   {8, -3},  {7, -3},  {6, -3}, {0, 1}});
const Poly kCodim5 = sparse({{0, 1},   {4, -3},  {5, -4},  {6, -1}, {7, 6},  {8, 6},  {9, 2},
                             {11, -2}, {12, -6}, {13, -6}, {14, 1}, {15, 4}, {16, 3}, {20, -1}});

std::vector<int> weights_of(const json& candidate) { return candidate.at("weights").get<std::vector<int>>(); }

Poly numerator_of(const json& candidate) {
  std::vector<Rat> c;
  for (const auto& x : candidate.at("numerator")) c.push_back(parse_rat(x.get<std::string>()));
  return Poly(std::move(c));
}

std::string list(std::span<const int> xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

/// Runs `orbirr search builtin:NAME --json` and checks weights and numerator.
Verdict golden(const std::string& name, const std::vector<int>& weights, const Poly& numerator, json* candidate_out) {
  std::ostringstream out, err;
  const int code = cli::run({"orbirr", "search", "builtin:" + name, "--json"}, out, err);
  if (code != 0) return {false, "exit " + std::to_string(code) + " " + err.str()};
  const json report = json::parse(out.str());
  const json& c = report.at("candidate");
  Verdict v;
  if (weights_of(c) != weights) {
    v.pass = false;
    v.detail += "weights " + list(weights_of(c)) + " ";
  }
  if (numerator_of(c) != numerator) {
    v.pass = false;
    v.detail += "numerator " + to_string(numerator_of(c)) + " ";
  }
  if (v.pass) v.detail = "P(" + list(weights) + "), deg Q = " + std::to_string(numerator.degree());
  if (candidate_out) *candidate_out = c;
  return v;
}

Verdict criterion1() { return golden("cy-codim3", {1, 1, 1, 3, 3, 5, 9}, kCodim3, nullptr); }

Verdict criterion2() {
  json c;
  Verdict v = golden("cy-codim4", {1, 1, 2, 3, 3, 3, 3, 5}, kCodim4, &c);
  if (!v.pass) return v;
  const auto rel = c.at("relations").at("degrees").get<std::vector<int>>();
  if (rel != std::vector<int>{6, 6, 6, 7, 7, 7, 8, 8, 8}) return {false, "relations " + list(rel)};
  v.detail += ", relations " + list(rel);
  return v;
}

Verdict criterion3() { return golden("cy-codim5", {1, 1, 2, 2, 2, 2, 3, 3, 4}, kCodim5, nullptr); }

std::optional<int> mismatch_against_chi(const PolarizedData& d) {
  const HilbertSeries hs = assemble(d);
  const TruncSeries s = series_of(hs.closed, kConsistencyOrder);
  if (s[0] != 1) return 0;
  const RiemannRoch rr(d);
  for (int m = 1; m <= kConsistencyOrder; ++m)
    if (s[m] != rr.value(m)) return m;
  return std::nullopt;
}

Verdict criterion4() {
  for (const auto& fx : builtin_fixtures())
    if (auto m = mismatch_against_chi(resolve(fx))) return {false, fx.name + " differs at m=" + std::to_string(*m)};
  std::mt19937 rng(20260401);
  for (int i = 0; i < kRandomBaskets; ++i) {
    const PolarizedData d = orbirr::testing::random_cy_data(rng, 20, 12);
    if (auto m = mismatch_against_chi(d))
      return {false, "random basket " + std::to_string(i) + " differs at m=" + std::to_string(*m)};
  }
  return {true, "3 fixtures + " + std::to_string(kRandomBaskets) + " random baskets, m <= " +
                    std::to_string(kConsistencyOrder)};
}

Verdict criterion5() {
  for (const auto& fx : builtin_fixtures()) {
    const RiemannRoch rr(resolve(fx));
    for (long m = 1; m <= kIntegralityRange; ++m)
      if (!is_integer(rr.value(m)))
        return {false, fx.name + ": chi(" + std::to_string(m) + ") = " + to_string(rr.value(m))};
  }
  return {true, "m in [1, " + std::to_string(kIntegralityRange) + "]"};
}

Verdict criterion6() {
  std::mt19937 rng(6);
  orbirr::testing::Real worst = 0;
  for (int i = 0; i < kOracleSamples; ++i) {
    const auto p = orbirr::testing::random_point(rng, 20);
    std::uniform_int_distribution<long> m_dist(1, 4L * p.s);
    const long m = m_dist(rng);
    const auto f = orbirr::testing::point_contribution_float(p, m);
    const auto err = abs(f.re - orbirr::testing::to_real(point_contribution(p, m)));
    worst = std::max({worst, err, orbirr::testing::Real(abs(f.im))});
    if (err >= kOracleTolerance || abs(f.im) >= kOracleTolerance)
      return {false, "s=" + std::to_string(p.s) + " m=" + std::to_string(m) + " error " + err.str(3)};
  }
  return {true, "max deviation " + worst.str(3)};
}

// As stated: every golden numerator must be anti-palindromic.
Verdict criterion7() {
  Verdict v;
  const std::pair<const char*, const Poly*> cases[] = {
      {"cy-codim3", &kCodim3}, {"cy-codim4", &kCodim4}, {"cy-codim5", &kCodim5}};
  for (const auto& [name, q] : cases) {
    const bool anti = -(q->reversed()) == *q;
    const auto sym = check_symmetry(*q);
    v.detail += std::string(v.detail.empty() ? "" : ", ") + name + " sign " +
                (sym.sign ? (*sym.sign > 0 ? "+1" : "-1") : "none");
    v.pass = v.pass && anti;
  }
  return v;
}

Verdict criterion8() {
  const std::vector<int> w = {1, 1, 2, 3, 6};
  // Oracle series: monomials of degree m in P(1,1,2,3,6) minus those of degree m-13.
  auto monomials = [](int m) {
    long c = 0;
    for (int e6 = 0; 6 * e6 <= m; ++e6)
      for (int e3 = 0; 6 * e6 + 3 * e3 <= m; ++e3)
        for (int e2 = 0; 6 * e6 + 3 * e3 + 2 * e2 <= m; ++e2) c += m - 6 * e6 - 3 * e3 - 2 * e2 + 1;
    return c;
  };
  HilbertSeries hs;
  hs.closed = RationalFunction::over_weights(Poly::one_minus_t_pow(13), w).reduced();
  hs.denominator_weights = w;
  const TruncSeries s = series_of(hs.closed, 80);
  for (int m = 0; m <= 80; ++m)
    if (s[m] != monomials(m) - (m >= 13 ? monomials(m - 13) : 0))
      return {false, "series differs from monomial count at m=" + std::to_string(m)};
  const ClearResult r = clear_weights(hs, w);
  if (!r.is_polynomial() || *r.numerator != Poly::one_minus_t_pow(13)) return {false, "numerator is not 1 - t^13"};
  if (!is_well_formed({w})) return {false, "P(1,1,2,3,6) reported not well formed"};
  return {true, "Q = 1 - t^13, well formed"};
}

Verdict criterion9() {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> h(0, 50);
  for (int i = 0; i < kRoundTrips; ++i) {
    PolarizedData d = orbirr::testing::random_cy_data(rng, 20, 12);
    const long h1 = h(rng), h2 = h(rng);
    const auto g = solve_invariants(h1, h2, d.points, d.curves);
    d.D3 = g.D3;
    d.Dc2 = g.Dc2;
    const RiemannRoch rr(d);
    if (rr.value(1) != h1 || rr.value(2) != h2) return {false, "basket " + std::to_string(i) + " does not round-trip"};
  }
  return {true, std::to_string(kRoundTrips) + " random baskets"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden codimension 3", criterion1, kGoldenSeconds},
      {2, "golden codimension 4 + relations", criterion2, kGoldenSeconds},
      {3, "golden codimension 5", criterion3, kGoldenSeconds},
      {4, "closed form vs direct chi", criterion4, kConsistencySeconds},
      {5, "integrality", criterion5, 0},
      {6, "cyclotomic vs 200-bit float", criterion6, 0},
      {7, "numerator symmetry sign -1", criterion7, 0},
      {8, "X13 hypersurface", criterion8, 0},
      {9, "solve_invariants round trip", criterion9, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      v.pass = false;
      v.detail += " (over time limit " + std::to_string(c.limit_s) + " s)";
    }
    failures += !v.pass;
    std::printf("%s %d %s [%.3f s] %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs, v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
