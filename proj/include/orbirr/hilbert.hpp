#pragma once

#include <optional>
#include <vector>

#include "orbirr/basket.hpp"
#include "orbirr/rational_function.hpp"

namespace orbirr {

/// Closed form of P(t) = 1 + sum_{m>=1} h^0(mD) t^m for a Calabi-Yau pair.
struct HilbertSeries {
  RationalFunction closed;  ///< reduced
  /// (1-t)^4 * prod_C (1-t^r)^2 * prod_Q (1-t^s): the assembly denominator
  /// before cancellation, as weights in ascending order.
  std::vector<int> denominator_weights;
  PolarizedData source;
};

/// (1/(1-t^s)) sum_{i=1}^{s-1} c_Q(iD) t^i, scaled by multiplicity.
RationalFunction point_series(const PointBasketEntry& p);

/// Generating function sum_m s_C(mD) t^m over (1-t^r)^2. Throws
/// std::invalid_argument when degK != 0: the closed form has no K-term.
RationalFunction curve_series(const CurveBasketEntry& c);

/// Order to which assemble() re-verifies the closed form against chi:
/// max(50, 2 lcm of all s and r), capped at 2000.
int verification_order(const PolarizedData& data);

/// Builds the closed form and checks it against direct evaluation of chi
/// up to verification_order. Throws std::invalid_argument for non-CY data,
/// ValidationError for invalid data, and std::logic_error if the closed
/// form disagrees with chi.
HilbertSeries assemble(const PolarizedData& data);

/// First m in [1, order] where the series coefficient differs from chi(m),
/// or nullopt (also checks the constant term 1, reported as m = 0).
std::optional<long> first_mismatch(const HilbertSeries& hs, int order);

}  // namespace orbirr
