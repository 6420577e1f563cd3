#include "orbirr/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "orbirr/riemann_roch.hpp"

namespace orbirr {
namespace {

// Quasi-periods beyond this make exact re-expansion the dominant cost.
constexpr long kMaxVerificationOrder = 2000;

}  // namespace

RationalFunction point_series(const PointBasketEntry& p) {
  const auto table = point_contribution_table(p);
  std::vector<Rat> num(static_cast<std::size_t>(p.s));
  for (int i = 1; i < p.s; ++i) num[static_cast<std::size_t>(i)] = table[static_cast<std::size_t>(i)];
  const int w[] = {p.s};
  return RationalFunction::over_weights(Poly(std::move(num)), w).reduced();
}

RationalFunction curve_series(const CurveBasketEntry& c) {
  auto rep = validate_curve(c);
  if (!rep.ok()) throw ValidationError(std::move(rep));
  if (c.degK != 0) throw std::invalid_argument("curve_series: closed form requires degK = 0");

  const int r = c.r;
  const std::size_t len = static_cast<std::size_t>(r);
  std::vector<Rat> weighted(len), plain(len), n_term(len);
  for (int i = 1; i < r; ++i) {
    const long rho = smallest_residue(static_cast<long>(i) * c.k, r);
    const Rat f = make_rat(rho * (r - rho), 2L * r);
    weighted[static_cast<std::size_t>(i)] = i * f;
    plain[static_cast<std::size_t>(i)] = f;
    n_term[static_cast<std::size_t>(i)] = Rat(rho * (r - rho) * (r - 2 * rho));
  }
  // -degD * ( A(t)/(1-t^r) + r t^r B(t)/(1-t^r)^2 ) + N/(12 r^2 tau) * C(t)/(1-t^r)
  const Poly one_minus = Poly::one_minus_t_pow(r);
  Poly num = (Poly(weighted) * one_minus + Poly(plain).shifted(r) * Rat(r)) * Rat(-c.degD);
  num += Poly(n_term) * one_minus * (Rat(c.N) / Rat(12L * r * r * c.tau));
  const int w[] = {r, r};
  return RationalFunction::over_weights(std::move(num), w).reduced();
}

int verification_order(const PolarizedData& data) {
  long l = 1;
  for (const auto& p : data.points) l = std::lcm(l, static_cast<long>(p.s));
  for (const auto& c : data.curves) l = std::lcm(l, static_cast<long>(c.r));
  return static_cast<int>(std::max(50L, std::min(2 * l, kMaxVerificationOrder)));
}

std::optional<long> first_mismatch(const HilbertSeries& hs, int order) {
  const TruncSeries ser = series_of(hs.closed, order);
  if (ser[0] != 1) return 0;
  const RiemannRoch rr(hs.source);
  for (int m = 1; m <= order; ++m)
    if (ser[m] != rr.value(m)) return m;
  return std::nullopt;
}

HilbertSeries assemble(const PolarizedData& data) {
  if (!data.calabi_yau) throw std::invalid_argument("assemble: the closed-form Hilbert series needs calabi_yau data");
  require_valid(data);

  HilbertSeries hs;
  hs.source = data;
  hs.denominator_weights = {1, 1, 1, 1};

  const int w1[] = {1, 1, 1, 1};
  const int w2[] = {1, 1};
  RationalFunction sum = RationalFunction::polynomial(Poly{1});
  // (t^3 + 4t^2 + t)/(1-t)^4 generates m^3; t/(1-t)^2 generates m.
  sum = sum + (data.D3 / 6) * RationalFunction::over_weights(Poly{0, 1, 4, 1}, w1);
  sum = sum + (data.Dc2 / 12) * RationalFunction::over_weights(Poly{0, 1}, w2);
  for (const auto& p : data.points) {
    sum = sum + point_series(p);
    hs.denominator_weights.push_back(p.s);
  }
  for (const auto& c : data.curves) {
    sum = sum + curve_series(c);
    hs.denominator_weights.insert(hs.denominator_weights.end(), {c.r, c.r});
  }
  std::sort(hs.denominator_weights.begin(), hs.denominator_weights.end());
  hs.closed = sum.reduced();

  if (!hs.closed.denominator_factors().divides(CycloProduct::of_weights(hs.denominator_weights)))
    throw std::logic_error("assemble: reduced denominator escapes the assembly denominator");
  if (auto bad = first_mismatch(hs, verification_order(data)))
    throw std::logic_error("assemble: closed form disagrees with chi at m = " + std::to_string(*bad));
  return hs;
}

}  // namespace orbirr
