#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbirr/rat.hpp"

namespace orbirr {

/// Point of type _n(1/s(a1,a2,a3)), repeated `multiplicity` times.
struct PointBasketEntry {
  int s = 2;
  std::array<int, 3> a{1, 1, 1};
  int n = 0;
  int multiplicity = 1;

  friend bool operator==(const PointBasketEntry&, const PointBasketEntry&) = default;
};

/// Curve of transverse type _k(1/r(1,-1)) with index tau and invariant N.
struct CurveBasketEntry {
  int r = 2;
  int k = 1;
  Rat degD = 0;  ///< deg D|_C
  Rat degK = 0;  ///< deg K_X|_C
  int tau = 1;
  long N = 0;

  friend bool operator==(const CurveBasketEntry&, const CurveBasketEntry&) = default;
};

/// Global intersection data of a polarized threefold (X, D) plus its basket.
struct PolarizedData {
  Rat D3 = 0;
  Rat Dc2 = 0;
  Rat D2K = 0;
  Rat DK2 = 0;
  Rat chiO = 0;
  std::vector<PointBasketEntry> points;
  std::vector<CurveBasketEntry> curves;
  bool calabi_yau = false;

  friend bool operator==(const PolarizedData&, const PolarizedData&) = default;
};

struct WeightedSpace {
  std::vector<int> weights;
};

enum class PointKind { isolated, dissident };

/// An axis i of a dissident point with alpha_i = gcd(a_i, s) > 1.
struct DissidentAxis {
  int index;  ///< 0-based
  int alpha;

  friend bool operator==(const DissidentAxis&, const DissidentAxis&) = default;
};

struct PointClass {
  PointKind kind = PointKind::isolated;
  std::vector<DissidentAxis> axes;
};

struct Violation {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string location;  ///< e.g. "points[1]", "curves[0]", "global"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> items;

  /// No errors (warnings allowed).
  bool ok() const;
  std::string to_string() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Reduces a_i and n modulo s, k modulo r, into the documented ranges.
PointBasketEntry normalized(PointBasketEntry p);
CurveBasketEntry normalized(CurveBasketEntry c);
PolarizedData normalized(PolarizedData d);

ValidationReport validate_point(const PointBasketEntry& p, const std::string& location = "point");
ValidationReport validate_curve(const CurveBasketEntry& c, const std::string& location = "curve");
ValidationReport validate(const PolarizedData& data);

/// Throws ValidationError if the report contains errors.
void require_valid(const PolarizedData& data);

/// Isolated iff gcd(a_i, s) = 1 for every i. Throws ValidationError for an
/// invalid entry.
PointClass classify_point(const PointBasketEntry& p);

/// Every n of the n+1 weights are coprime. Throws std::invalid_argument on
/// an empty weight list.
bool is_well_formed(const WeightedSpace& w);

}  // namespace orbirr
