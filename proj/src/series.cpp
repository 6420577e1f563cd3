#include "orbirr/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbirr {

TruncSeries::TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries needs at least one coefficient");
}

TruncSeries TruncSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  return TruncSeries(std::vector<Rat>(static_cast<std::size_t>(order) + 1));
}

TruncSeries TruncSeries::from_poly(const Poly& p, int order) {
  TruncSeries s = zero(order);
  for (int i = 0; i <= std::min(order, p.degree()); ++i) s.coeffs_[static_cast<std::size_t>(i)] = p.coeff(i);
  return s;
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) throw std::invalid_argument("truncated: order out of range");
  return TruncSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
  return TruncSeries(std::move(out));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = a[i] - b[i];
  return TruncSeries(std::move(out));
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return TruncSeries(std::move(out));
}

TruncSeries series_of(const Poly& num, const Poly& den, int order) {
  if (order < 0) throw std::invalid_argument("series_of: negative order");
  if (den.coeff(0) == 0) throw std::domain_error("series_of: denominator vanishes at t = 0");
  const Rat inv0 = 1 / den.coeff(0);
  const auto dc = den.coefficients();
  std::vector<Rat> out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    Rat acc = num.coeff(i);
    const int top = std::min(i, den.degree());
    for (int j = 1; j <= top; ++j) {
      const Rat& d = dc[static_cast<std::size_t>(j)];
      if (d != 0) acc -= d * out[static_cast<std::size_t>(i - j)];
    }
    out[static_cast<std::size_t>(i)] = acc * inv0;
  }
  return TruncSeries(std::move(out));
}

}  // namespace orbirr
