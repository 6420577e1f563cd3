#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbirr/rat.hpp"

namespace orbirr {

/// Dense univariate polynomial over Q in the variable t. Coefficient i is
/// the coefficient of t^i; the list never ends in a zero, so the zero
/// polynomial is the empty list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int degree);
  /// 1 - t^w.
  static Poly one_minus_t_pow(int w);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i; zero outside the stored range.
  Rat coeff(int i) const;
  const Rat& leading() const { return coeffs_.back(); }
  std::span<const Rat> coefficients() const { return coeffs_; }

  Rat eval(const Rat& x) const;
  /// Multiplies by t^k, k >= 0.
  Poly shifted(int k) const;
  /// t^deg * p(1/t).
  Poly reversed() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

Poly poly_mul(const Poly& a, const Poly& b);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q. Throws std::domain_error for a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<Poly> exact_quotient(const Poly& a, const Poly& b);

/// Human-readable form in ascending degree, e.g. "1 - t^6 + 2*t^13".
std::string to_string(const Poly& p, char var = 't');

}  // namespace orbirr
