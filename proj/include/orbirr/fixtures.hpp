#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbirr/basket.hpp"

namespace orbirr {

/// Calabi-Yau input given by section counts h^0(D), h^0(2D) and a basket.
struct CalabiYauInput {
  std::string name;
  long h1 = 0;
  long h2 = 0;
  std::vector<PointBasketEntry> points;
  std::vector<CurveBasketEntry> curves;
};

/// Solves for D^3 and D.c_2 and returns the full polarized data.
PolarizedData resolve(const CalabiYauInput& input);

/// Golden inputs shipped with the library:
///   cy-codim3  h0 = 3, 6; _2(1/3(1,1,1)), _8(1/9(1,3,5)); curve r=3 k=1 degD=1/9 tau=3 N=22
///   cy-codim4  h0 = 2, 4; _4(1/5(1,1,3)); curve r=3 k=1 degD=1 tau=1 N=12
///   cy-codim5  h0 = 2, 7; _3(1/4(2,3,3)); curve r=2 k=1 degD=7/4 tau=2
const std::vector<CalabiYauInput>& builtin_fixtures();
std::optional<CalabiYauInput> find_fixture(std::string_view name);

}  // namespace orbirr
