#include "orbirr/basket.hpp"

#include <numeric>
#include <sstream>

namespace orbirr {
namespace {

int mod_into(long x, int m) {
  long r = x % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

void add_error(ValidationReport& rep, const std::string& where, std::string msg) {
  rep.items.push_back({Violation::Severity::error, where, std::move(msg)});
}

void append(ValidationReport& into, const ValidationReport& from) {
  into.items.insert(into.items.end(), from.items.begin(), from.items.end());
}

}  // namespace

bool ValidationReport::ok() const {
  for (const auto& v : items)
    if (v.severity == Violation::Severity::error) return false;
  return true;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : items)
    os << (v.severity == Violation::Severity::error ? "error" : "warning") << ": " << v.location << ": " << v.message
       << "\n";
  return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("invalid polarized data:\n" + report.to_string()), report_(std::move(report)) {}

PointBasketEntry normalized(PointBasketEntry p) {
  if (p.s < 1) return p;
  for (int& ai : p.a) ai = mod_into(ai, p.s);
  p.n = mod_into(p.n, p.s);
  return p;
}

CurveBasketEntry normalized(CurveBasketEntry c) {
  if (c.r < 1) return c;
  c.k = mod_into(c.k, c.r);
  return c;
}

PolarizedData normalized(PolarizedData d) {
  for (auto& p : d.points) p = normalized(p);
  for (auto& c : d.curves) c = normalized(c);
  return d;
}

ValidationReport validate_point(const PointBasketEntry& p, const std::string& where) {
  ValidationReport rep;
  if (p.s < 2) {
    add_error(rep, where, "s must be at least 2");
    return rep;
  }
  if (p.multiplicity < 1) add_error(rep, where, "multiplicity must be positive");
  if (p.n < 0 || p.n >= p.s) add_error(rep, where, "n must lie in [0, s-1]");
  bool ranges_ok = true;
  for (int i = 0; i < 3; ++i) {
    if (p.a[i] < 1 || p.a[i] >= p.s) {
      add_error(rep, where, "a" + std::to_string(i + 1) + " must lie in [1, s-1]");
      ranges_ok = false;
    }
  }
  if (!ranges_ok) return rep;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::gcd(std::gcd(p.a[i], p.a[j]), p.s) != 1)
        add_error(rep, where,
                  "a" + std::to_string(i + 1) + ", a" + std::to_string(j + 1) + ", s must have no common divisor");
  for (int i = 0; i < 3; ++i) {
    const int alpha = std::gcd(p.a[i], p.s);
    if (alpha == 1) continue;
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    if ((p.a[j] + p.a[k]) % alpha != 0)
      add_error(rep, where,
                "dissident axis " + std::to_string(i + 1) + " needs a" + std::to_string(j + 1) + " + a" +
                    std::to_string(k + 1) + " = 0 mod " + std::to_string(alpha));
  }
  return rep;
}

ValidationReport validate_curve(const CurveBasketEntry& c, const std::string& where) {
  ValidationReport rep;
  if (c.r < 2) {
    add_error(rep, where, "r must be at least 2");
    return rep;
  }
  if (c.k < 1 || c.k >= c.r)
    add_error(rep, where, "k must lie in [1, r-1]");
  else if (std::gcd(c.k, c.r) != 1)
    add_error(rep, where, "k,r must be coprime");
  if (c.tau < 1) add_error(rep, where, "tau must be positive");
  if (c.r == 2 && c.N != 0)
    rep.items.push_back({Violation::Severity::warning, where, "N is ignored for r = 2 (its coefficient vanishes)"});
  return rep;
}

ValidationReport validate(const PolarizedData& data) {
  ValidationReport rep;
  for (std::size_t i = 0; i < data.points.size(); ++i)
    append(rep, validate_point(data.points[i], "points[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < data.curves.size(); ++i)
    append(rep, validate_curve(data.curves[i], "curves[" + std::to_string(i) + "]"));
  if (data.calabi_yau) {
    if (data.chiO != 0) add_error(rep, "global", "calabi_yau requires chiO=0");
    if (data.D2K != 0) add_error(rep, "global", "calabi_yau requires D2K=0");
    if (data.DK2 != 0) add_error(rep, "global", "calabi_yau requires DK2=0");
    for (std::size_t i = 0; i < data.curves.size(); ++i)
      if (data.curves[i].degK != 0)
        add_error(rep, "curves[" + std::to_string(i) + "]", "calabi_yau requires degK=0");
  }
  return rep;
}

void require_valid(const PolarizedData& data) {
  auto rep = validate(data);
  if (!rep.ok()) throw ValidationError(std::move(rep));
}

PointClass classify_point(const PointBasketEntry& p) {
  auto rep = validate_point(p);
  if (!rep.ok()) throw ValidationError(std::move(rep));
  PointClass out;
  for (int i = 0; i < 3; ++i) {
    const int alpha = std::gcd(p.a[i], p.s);
    if (alpha > 1) out.axes.push_back({i, alpha});
  }
  out.kind = out.axes.empty() ? PointKind::isolated : PointKind::dissident;
  return out;
}

bool is_well_formed(const WeightedSpace& w) {
  if (w.weights.empty()) throw std::invalid_argument("is_well_formed: empty weight list");
  for (int v : w.weights)
    if (v < 1) throw std::invalid_argument("is_well_formed: weights must be positive");
  const std::size_t n = w.weights.size();
  for (std::size_t i = 0; i < n; ++i) {
    int g = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) g = std::gcd(g, w.weights[j]);
    // A single weight omitted from a one-element list leaves gcd() = 0.
    if (g != 1) return false;
  }
  return true;
}

}  // namespace orbirr
