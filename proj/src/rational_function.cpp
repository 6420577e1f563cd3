#include "orbirr/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbirr/cyclotomic.hpp"

namespace orbirr {

CycloProduct CycloProduct::of_weights(std::span<const int> weights) {
  CycloProduct p;
  for (int w : weights) {
    if (w < 1) throw std::invalid_argument("weights must be positive");
    for (int e = 1; e <= w; ++e)
      if (w % e == 0) p.multiply(e);
  }
  return p;
}

void CycloProduct::multiply(int period, int count) {
  if (period < 1) throw std::invalid_argument("cyclotomic period must be positive");
  if (count < 0) throw std::invalid_argument("negative exponent");
  if (count == 0) return;
  exps_[period] += count;
}

void CycloProduct::divide(int period, int count) {
  auto it = exps_.find(period);
  if (it == exps_.end() || it->second < count) throw std::logic_error("CycloProduct::divide: factor not present");
  it->second -= count;
  if (it->second == 0) exps_.erase(it);
}

int CycloProduct::exponent(int period) const {
  auto it = exps_.find(period);
  return it == exps_.end() ? 0 : it->second;
}

int CycloProduct::max_period() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }

int CycloProduct::degree() const {
  int d = 0;
  for (auto [e, m] : exps_) d += m * (e == 1 ? 1 : euler_phi(e));
  return d;
}

Poly CycloProduct::expand() const {
  Poly out{1};
  for (auto [e, m] : exps_) {
    const Poly f = cyclotomic_factor(e);
    for (int i = 0; i < m; ++i) out *= f;
  }
  return out;
}

bool CycloProduct::divides(const CycloProduct& other) const {
  return std::all_of(exps_.begin(), exps_.end(), [&](auto em) { return other.exponent(em.first) >= em.second; });
}

CycloProduct CycloProduct::lcm(const CycloProduct& a, const CycloProduct& b) {
  CycloProduct out = a;
  for (auto [e, m] : b.exps_) {
    int& slot = out.exps_[e];
    slot = std::max(slot, m);
  }
  return out;
}

CycloProduct CycloProduct::quotient(const CycloProduct& a, const CycloProduct& b) {
  CycloProduct out = a;
  for (auto [e, m] : b.exps_) out.divide(e, m);
  return out;
}

CycloProduct operator*(const CycloProduct& a, const CycloProduct& b) {
  CycloProduct out = a;
  for (auto [e, m] : b.exps_) out.multiply(e, m);
  return out;
}

std::string to_string(const CycloProduct& p) {
  if (p.empty()) return "1";
  std::string out;
  for (auto [e, m] : p.exponents()) {
    if (!out.empty()) out += "*";
    out += e == 1 ? "(1-t)" : "Phi" + std::to_string(e);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

std::vector<int> covering_weights(const CycloProduct& p) {
  std::vector<int> weights;
  CycloProduct rest = p;
  while (!rest.empty()) {
    const int w = rest.max_period();
    weights.push_back(w);
    for (int e = 1; e <= w; ++e)
      if (w % e == 0 && rest.exponent(e) > 0) rest.divide(e);
  }
  std::sort(weights.begin(), weights.end());
  return weights;
}

RationalFunction::RationalFunction(Poly num, CycloProduct den) : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::polynomial(Poly p) { return RationalFunction(std::move(p), CycloProduct{}); }

RationalFunction RationalFunction::over_weights(Poly num, std::span<const int> weights) {
  return RationalFunction(std::move(num), CycloProduct::of_weights(weights));
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) return {};
  Poly num = num_;
  CycloProduct den;
  for (auto [e, m] : den_.exponents()) {
    const Poly f = cyclotomic_factor(e);
    int left = m;
    while (left > 0) {
      auto q = exact_quotient(num, f);
      if (!q) break;
      num = std::move(*q);
      --left;
    }
    den.multiply(e, left);
  }
  return RationalFunction(std::move(num), std::move(den));
}

bool RationalFunction::is_polynomial() const { return reduced().den_.empty(); }

RationalFunction RationalFunction::times_weights(std::span<const int> weights) const {
  const CycloProduct extra = CycloProduct::of_weights(weights);
  CycloProduct den = den_;
  CycloProduct into_num;
  for (auto [e, m] : extra.exponents()) {
    const int cancel = std::min(m, den.exponent(e));
    if (cancel > 0) den.divide(e, cancel);
    into_num.multiply(e, m - cancel);
  }
  return RationalFunction(num_ * into_num.expand(), std::move(den)).reduced();
}

namespace {

RationalFunction combine(const RationalFunction& a, const RationalFunction& b, bool subtract) {
  const CycloProduct den = CycloProduct::lcm(a.denominator_factors(), b.denominator_factors());
  Poly na = a.numerator() * CycloProduct::quotient(den, a.denominator_factors()).expand();
  Poly nb = b.numerator() * CycloProduct::quotient(den, b.denominator_factors()).expand();
  if (subtract)
    na -= nb;
  else
    na += nb;
  return RationalFunction(std::move(na), den).reduced();
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return combine(a, b, false); }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return combine(a, b, true); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_).reduced();
}

RationalFunction operator*(const Rat& c, const RationalFunction& a) {
  return RationalFunction(a.num_ * c, a.den_).reduced();
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  const RationalFunction ra = a.reduced(), rb = b.reduced();
  return ra.num_ == rb.num_ && ra.den_ == rb.den_;
}

TruncSeries series_of(const RationalFunction& rf, int order) {
  return series_of(rf.numerator(), rf.denominator(), order);
}

}  // namespace orbirr
