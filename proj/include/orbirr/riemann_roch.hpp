#pragma once

#include <span>
#include <vector>

#include "orbirr/basket.hpp"
#include "orbirr/rat.hpp"

namespace orbirr {

/// x mod r in [0, r-1]. Throws std::invalid_argument for r <= 0.
long smallest_residue(long x, long r);

/// Basket contribution c_P(mD) of a point, scaled by its multiplicity:
///
///   (1/s) sum_{eps in mu_s, eps^a_i != 1} (eps^{-nm} - 1) / prod_i (1 - eps^{-a_i})
///
/// evaluated exactly. The roots eps = zeta_s^j are grouped by their order
/// d = s / gcd(j, s); each group is a full Galois orbit in Q(zeta_d), so
/// its sum is rational and is extracted with rational_part.
Rat point_contribution(const PointBasketEntry& p, long m);

/// point_contribution for m = 0..s-1 (the function has period s in m).
std::vector<Rat> point_contribution_table(const PointBasketEntry& p);

/// Curve contribution s_C(mD). With rho = mk mod r:
///   -m rho(r-rho)/(2r) degD + rho(r-rho)/(4r) degK + rho(r-rho)(r-2rho)/(12 r^2 tau) N
Rat curve_contribution(const CurveBasketEntry& c, long m);

struct ChiBreakdown {
  Rat polynomial_part;
  std::vector<Rat> point_contribs;
  std::vector<Rat> curve_contribs;
};

struct ChiResult {
  long m = 0;
  Rat value;
  ChiBreakdown breakdown;
};

/// Evaluates chi(X, O_X(mD)) for one polarized threefold, caching the
/// periodic point contributions. Construction validates the data.
class RiemannRoch {
 public:
  explicit RiemannRoch(PolarizedData data);

  const PolarizedData& data() const { return data_; }
  /// m >= 1; throws std::invalid_argument otherwise.
  ChiResult chi(long m) const;
  Rat value(long m) const { return chi(m).value; }

 private:
  PolarizedData data_;
  std::vector<std::vector<Rat>> point_tables_;
};

ChiResult chi(const PolarizedData& data, long m);

struct GlobalInvariants {
  Rat D3;
  Rat Dc2;

  friend bool operator==(const GlobalInvariants&, const GlobalInvariants&) = default;
};

/// Solves h(m) = m^3 D3/6 + m Dc2/12 + baskets(m) for m = 1, 2 in the
/// Calabi-Yau setting. The 2x2 system has determinant -1/12.
GlobalInvariants solve_invariants(long h1, long h2, std::span<const PointBasketEntry> points,
                                  std::span<const CurveBasketEntry> curves);

}  // namespace orbirr
