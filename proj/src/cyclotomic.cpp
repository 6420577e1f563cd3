#include "orbirr/cyclotomic.hpp"

#include <map>
#include <numeric>

namespace orbirr {
namespace {

Poly cyclotomic_memo(int d, std::map<int, Poly>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  Poly p = Poly::one_minus_t_pow(d) * Rat(-1);  // t^d - 1
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = exact_quotient(p, cyclotomic_memo(e, memo));
    if (!q) throw std::logic_error("cyclotomic_poly: inexact division");
    p = std::move(*q);
  }
  memo.emplace(d, p);
  return p;
}

}  // namespace

Poly cyclotomic_poly(int d) {
  if (d <= 0) throw std::invalid_argument("cyclotomic_poly: d must be positive");
  std::map<int, Poly> memo;
  return cyclotomic_memo(d, memo);
}

Poly cyclotomic_factor(int e) {
  if (e == 1) return Poly{1, -1};
  return cyclotomic_poly(e);
}

int euler_phi(int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), modulus_(std::make_shared<const Poly>(cyclotomic_poly(conductor))) {}

CycloElem CyclotomicField::element(const Poly& coeffs) const {
  return CycloElem(conductor_, modulus_, divmod(coeffs, *modulus_).remainder);
}

CycloElem CyclotomicField::constant(const Rat& c) const { return CycloElem(conductor_, modulus_, Poly::constant(c)); }

CycloElem CyclotomicField::zeta_power(long k) const {
  long e = k % conductor_;
  if (e < 0) e += conductor_;
  return element(Poly::monomial(Rat(1), static_cast<int>(e)));
}

CycloElem::CycloElem(int conductor, const Poly& coeffs) : CycloElem(CyclotomicField(conductor).element(coeffs)) {}

CycloElem::CycloElem(int conductor, std::shared_ptr<const Poly> modulus, Poly coeffs)
    : conductor_(conductor), modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

CycloElem CycloElem::constant(int conductor, const Rat& c) { return CyclotomicField(conductor).constant(c); }

CycloElem CycloElem::zeta_power(int conductor, long k) { return CyclotomicField(conductor).zeta_power(k); }

void CycloElem::check_same_field(const CycloElem& o) const {
  if (o.conductor_ != conductor_) throw std::invalid_argument("CycloElem: mismatched conductors");
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  check_same_field(o);
  coeffs_ += o.coeffs_;
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  check_same_field(o);
  coeffs_ -= o.coeffs_;
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  check_same_field(o);
  coeffs_ = divmod(coeffs_ * o.coeffs_, *modulus_).remainder;
  return *this;
}

CycloElem cyclo_inv(const CycloElem& x) {
  if (x.is_zero()) throw std::domain_error("cyclo_inv: zero has no inverse");
  // Invariant: s_i * x == r_i (mod Phi).
  Poly r0 = *x.modulus_, r1 = x.coeffs_;
  Poly s0, s1 = Poly{1};
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_d is irreducible, so the last nonzero remainder is a unit.
  if (r1.is_zero()) throw std::logic_error("cyclo_inv: element shares a factor with the modulus");
  s1 *= 1 / r1.coeff(0);
  return CycloElem(x.conductor_, x.modulus_, divmod(s1, *x.modulus_).remainder);
}

Rat rational_part(const CycloElem& x) {
  if (x.coeffs().degree() > 0)
    throw NonRationalError("rational_part: element of Q(zeta_" + std::to_string(x.conductor()) +
                           ") is not rational: " + to_string(x.coeffs(), 'z'));
  return x.coeffs().coeff(0);
}

}  // namespace orbirr
