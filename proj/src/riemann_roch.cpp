#include "orbirr/riemann_roch.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

#include "orbirr/cyclotomic.hpp"

namespace orbirr {
namespace {

#ifndef NDEBUG
// Norm of 1 - zeta_{d'} from Q(zeta_d) down to Q, with d' | d.
mpz_class norm_one_minus_root(int order, int conductor) {
  int p = 0, rest = order;
  for (int q = 2; q <= rest; ++q) {
    if (rest % q != 0) continue;
    p = q;
    while (rest % q == 0) rest /= q;
    break;
  }
  const long base = (order > 1 && rest == 1) ? p : 1;  // Phi_{d'}(1)
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(euler_phi(conductor) / euler_phi(order)));
  return out;
}
#endif

// Sum over eps of one Galois orbit (eps of exact order d), without the 1/s.
// Returns a value for every residue m mod s.
std::vector<Rat> orbit_sums(const PointBasketEntry& p, int d) {
  const CyclotomicField field(d);
  const CycloElem one = field.constant(1);
  CycloElem acc_den_inv = one;
  std::vector<CycloElem> sums(static_cast<std::size_t>(p.s), field.constant(0));
  for (int u = 1; u <= d; ++u) {
    if (std::gcd(u, d) != 1) continue;
    // eps = zeta_d^u
    CycloElem den = one;
    for (int ai : p.a) den *= one - field.zeta_power(-static_cast<long>(ai) * u);
    const CycloElem inv = cyclo_inv(den);
    for (int m = 0; m < p.s; ++m) {
      const long e = -static_cast<long>(p.n) * m * u;
      sums[static_cast<std::size_t>(m)] += (field.zeta_power(e) - one) * inv;
    }
  }
  std::vector<Rat> out;
  out.reserve(sums.size());
  for (const auto& x : sums) out.push_back(rational_part(x));
  return out;
}

}  // namespace

long smallest_residue(long x, long r) {
  if (r <= 0) throw std::invalid_argument("smallest_residue: modulus must be positive");
  long v = x % r;
  return v < 0 ? v + r : v;
}

std::vector<Rat> point_contribution_table(const PointBasketEntry& p) {
  auto rep = validate_point(p);
  if (!rep.ok()) throw ValidationError(std::move(rep));

  std::vector<Rat> table(static_cast<std::size_t>(p.s));
#ifndef NDEBUG
  mpz_class norm_bound = p.s;
#endif
  for (int d = 2; d <= p.s; ++d) {
    if (p.s % d != 0) continue;
    // eps of order d has eps^a = 1 iff d | a.
    bool excluded = false;
    for (int ai : p.a) excluded = excluded || ai % d == 0;
    if (excluded) continue;
    const auto sums = orbit_sums(p, d);
    for (int m = 0; m < p.s; ++m) table[static_cast<std::size_t>(m)] += sums[static_cast<std::size_t>(m)];
#ifndef NDEBUG
    for (int ai : p.a) norm_bound *= norm_one_minus_root(d / std::gcd(ai, d), d);
#endif
  }
  for (auto& v : table) {
    v /= p.s;
    v *= p.multiplicity;
#ifndef NDEBUG
    assert(mpz_divisible_p(norm_bound.get_mpz_t(), v.get_den().get_mpz_t()));
#endif
  }
  return table;
}

Rat point_contribution(const PointBasketEntry& p, long m) {
  const auto table = point_contribution_table(p);
  return table[static_cast<std::size_t>(smallest_residue(m, p.s))];
}

Rat curve_contribution(const CurveBasketEntry& c, long m) {
  auto rep = validate_curve(c);
  if (!rep.ok()) throw ValidationError(std::move(rep));
  const long r = c.r;
  const long rho = smallest_residue(m * c.k, r);
  const long q = rho * (r - rho);
  Rat out = -Rat(m) * make_rat(q, 2 * r) * c.degD;
  out += make_rat(q, 4 * r) * c.degK;
  out += make_rat(q * (r - 2 * rho), 12 * r * r * c.tau) * Rat(c.N);
  return out;
}

RiemannRoch::RiemannRoch(PolarizedData data) : data_(std::move(data)) {
  require_valid(data_);
  point_tables_.reserve(data_.points.size());
  for (const auto& p : data_.points) point_tables_.push_back(point_contribution_table(p));
}

ChiResult RiemannRoch::chi(long m) const {
  if (m < 1) throw std::invalid_argument("chi: m must be a positive integer");
  ChiResult res;
  res.m = m;
  const Rat mm(m);
  // mD(mD-K)(2mD-K) = 2m^3 D^3 - 3m^2 D^2K + m DK^2
  res.breakdown.polynomial_part =
      data_.chiO + (2 * mm * mm * mm * data_.D3 - 3 * mm * mm * data_.D2K + mm * data_.DK2) / 12 +
      mm * data_.Dc2 / 12;
  res.value = res.breakdown.polynomial_part;
  for (std::size_t i = 0; i < data_.points.size(); ++i) {
    const auto& table = point_tables_[i];
    res.breakdown.point_contribs.push_back(table[static_cast<std::size_t>(smallest_residue(m, data_.points[i].s))]);
    res.value += res.breakdown.point_contribs.back();
  }
  for (const auto& c : data_.curves) {
    res.breakdown.curve_contribs.push_back(curve_contribution(c, m));
    res.value += res.breakdown.curve_contribs.back();
  }
  return res;
}

ChiResult chi(const PolarizedData& data, long m) { return RiemannRoch(data).chi(m); }

GlobalInvariants solve_invariants(long h1, long h2, std::span<const PointBasketEntry> points,
                                  std::span<const CurveBasketEntry> curves) {
  Rat basket1 = 0, basket2 = 0;
  for (const auto& p : points) {
    const auto table = point_contribution_table(p);
    basket1 += table[smallest_residue(1, p.s)];
    basket2 += table[smallest_residue(2, p.s)];
  }
  for (const auto& c : curves) {
    basket1 += curve_contribution(c, 1);
    basket2 += curve_contribution(c, 2);
  }
  // A = D3/6 + Dc2/12, B = 8 D3/6 + 2 Dc2/12; B - 2A = D3.
  const Rat A = Rat(h1) - basket1;
  const Rat B = Rat(h2) - basket2;
  GlobalInvariants out;
  out.D3 = B - 2 * A;
  out.Dc2 = 12 * (A - out.D3 / 6);
  return out;
}

}  // namespace orbirr
