#pragma once

#include <memory>
#include <stdexcept>

#include "orbirr/poly.hpp"
#include "orbirr/rat.hpp"

namespace orbirr {

/// The d-th cyclotomic polynomial, built by dividing t^d - 1 by Phi_e for
/// every proper divisor e of d. Throws std::invalid_argument for d <= 0.
Poly cyclotomic_poly(int d);

/// Cyclotomic factor normalised to constant term 1: 1 - t for e = 1 and
/// Phi_e otherwise. With this choice 1 - t^w is the product of
/// cyclotomic_factor(e) over the divisors e of w.
Poly cyclotomic_factor(int e);

int euler_phi(int n);

/// Raised by rational_part when an element has a nonzero irrational part.
class NonRationalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CycloElem;

/// Q(zeta_d). Elements created from one field share its modulus.
class CyclotomicField {
 public:
  explicit CyclotomicField(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return modulus_->degree(); }
  const Poly& modulus() const { return *modulus_; }

  CycloElem element(const Poly& coeffs) const;
  CycloElem constant(const Rat& c) const;
  /// zeta_d^k for any integer k.
  CycloElem zeta_power(long k) const;

 private:
  int conductor_;
  std::shared_ptr<const Poly> modulus_;
};

/// Element of Q(zeta_d), stored in the power basis modulo Phi_d.
class CycloElem {
 public:
  /// Reduces coeffs modulo Phi_d.
  CycloElem(int conductor, const Poly& coeffs);

  static CycloElem constant(int conductor, const Rat& c);
  /// zeta_d^k for any integer k.
  static CycloElem zeta_power(int conductor, long k);

  int conductor() const { return conductor_; }
  const Poly& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  CycloElem(int conductor, std::shared_ptr<const Poly> modulus, Poly coeffs);
  void check_same_field(const CycloElem& o) const;

  int conductor_;
  std::shared_ptr<const Poly> modulus_;
  Poly coeffs_;

  friend class CyclotomicField;
  friend CycloElem cyclo_inv(const CycloElem& x);
};

/// Multiplicative inverse via the extended Euclidean algorithm against
/// Phi_d. Throws std::domain_error for zero.
CycloElem cyclo_inv(const CycloElem& x);

/// Degree-0 coefficient of x; throws NonRationalError if any higher
/// power-basis coefficient is nonzero.
Rat rational_part(const CycloElem& x);

}  // namespace orbirr
