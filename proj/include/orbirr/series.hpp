#pragma once

#include <span>
#include <vector>

#include "orbirr/poly.hpp"
#include "orbirr/rat.hpp"

namespace orbirr {

/// Power series known exactly up to and including t^order. Arithmetic
/// between two series keeps the smaller order and never extends silently.
class TruncSeries {
 public:
  /// order = coeffs.size() - 1; coeffs must be nonempty.
  explicit TruncSeries(std::vector<Rat> coeffs);
  static TruncSeries zero(int order);
  static TruncSeries from_poly(const Poly& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  std::span<const Rat> coefficients() const { return coeffs_; }
  TruncSeries truncated(int order) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// Maclaurin coefficients of num/den through t^order. Throws
/// std::domain_error when den(0) = 0.
TruncSeries series_of(const Poly& num, const Poly& den, int order);

}  // namespace orbirr
