#include "orbirr/fixtures.hpp"

#include "orbirr/riemann_roch.hpp"

namespace orbirr {

PolarizedData resolve(const CalabiYauInput& input) {
  PolarizedData d;
  d.calabi_yau = true;
  d.points = input.points;
  d.curves = input.curves;
  d = normalized(std::move(d));
  require_valid(d);
  const auto inv = solve_invariants(input.h1, input.h2, d.points, d.curves);
  d.D3 = inv.D3;
  d.Dc2 = inv.Dc2;
  return d;
}

const std::vector<CalabiYauInput>& builtin_fixtures() {
  static const std::vector<CalabiYauInput> fixtures = {
      {"cy-codim3", 3, 6, {{3, {1, 1, 1}, 2, 1}, {9, {1, 3, 5}, 8, 1}}, {{3, 1, make_rat(1, 9), 0, 3, 22}}},
      {"cy-codim4", 2, 4, {{5, {1, 1, 3}, 4, 1}}, {{3, 1, Rat(1), 0, 1, 12}}},
      {"cy-codim5", 2, 7, {{4, {2, 3, 3}, 3, 1}}, {{2, 1, make_rat(7, 4), 0, 2, 0}}},
  };
  return fixtures;
}

std::optional<CalabiYauInput> find_fixture(std::string_view name) {
  for (const auto& f : builtin_fixtures())
    if (f.name == name) return f;
  return std::nullopt;
}

}  // namespace orbirr
