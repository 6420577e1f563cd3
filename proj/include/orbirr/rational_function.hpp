#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "orbirr/poly.hpp"
#include "orbirr/series.hpp"

namespace orbirr {

/// Product of cyclotomic factors Psi_e^(m_e), where Psi_1 = 1 - t and
/// Psi_e = Phi_e for e > 1. Every such product has constant term 1, and
/// prod_{w in W} (1 - t^w) is the product of Psi_e over all divisors e of
/// each w, so divisibility between denominators is a comparison of
/// exponent maps.
class CycloProduct {
 public:
  CycloProduct() = default;

  static CycloProduct of_weights(std::span<const int> weights);

  void multiply(int period, int count = 1);
  /// Removes `count` copies of Psi_period; throws if not present.
  void divide(int period, int count = 1);

  int exponent(int period) const;
  const std::map<int, int>& exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }
  /// Largest e with a nonzero exponent; 0 when empty.
  int max_period() const;
  int degree() const;
  Poly expand() const;

  bool divides(const CycloProduct& other) const;
  static CycloProduct lcm(const CycloProduct& a, const CycloProduct& b);
  /// a / b; requires b to divide a.
  static CycloProduct quotient(const CycloProduct& a, const CycloProduct& b);

  friend CycloProduct operator*(const CycloProduct& a, const CycloProduct& b);
  friend bool operator==(const CycloProduct& a, const CycloProduct& b) = default;

 private:
  std::map<int, int> exps_;
};

std::string to_string(const CycloProduct& p);

/// Smallest-first list of weights W, built by repeatedly adjoining the
/// largest remaining period, such that prod (1 - t^w) is divisible by p.
std::vector<int> covering_weights(const CycloProduct& p);

/// num / den with den a CycloProduct. Sums, differences and products are
/// returned in reduced form: no Psi_e in den divides num.
class RationalFunction {
 public:
  RationalFunction() = default;
  /// Not reduced; call reduced() for the canonical form.
  RationalFunction(Poly num, CycloProduct den);

  static RationalFunction polynomial(Poly p);
  /// num / prod (1 - t^w).
  static RationalFunction over_weights(Poly num, std::span<const int> weights);

  const Poly& numerator() const { return num_; }
  const CycloProduct& denominator_factors() const { return den_; }
  Poly denominator() const { return den_.expand(); }

  RationalFunction reduced() const;
  /// True iff the reduced denominator is 1.
  bool is_polynomial() const;
  /// Reduced product with prod (1 - t^w).
  RationalFunction times_weights(std::span<const int> weights) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const Rat& c, const RationalFunction& a);
  /// Equality of the reduced forms.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  Poly num_;
  CycloProduct den_;
};

TruncSeries series_of(const RationalFunction& rf, int order);

}  // namespace orbirr
