#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "orbirr/basket.hpp"
#include "orbirr/riemann_roch.hpp"

namespace orbirr {

/// JSON input for the CLI. Either (D3, Dc2) or the section counts h0 =
/// [h^0(D), h^0(2D)] are given; the latter implies calabi_yau.
///
///   {
///     "name": "cy-codim3",
///     "calabi_yau": true,
///     "h0": [3, 6],
///     "points": [{"s": 9, "a": [1, 3, 5], "n": 8, "multiplicity": 1}],
///     "curves": [{"r": 3, "k": 1, "degD": "1/9", "tau": 3, "N": 22}]
///   }
///
/// Rationals are JSON integers or strings "p/q"; floats are rejected.
struct InputDocument {
  std::string name;
  std::string notes;
  PolarizedData data;  ///< D3 and Dc2 are meaningful only when h0 is empty
  std::optional<std::array<long, 2>> h0;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and normalizes (residues reduced into range). Throws ParseError.
InputDocument parse_input(const nlohmann::json& j);
InputDocument parse_input_text(std::string_view text);
/// Reads a file, or a built-in fixture when the argument is "builtin:NAME".
InputDocument load_input(const std::string& path);

/// Same schema as parse_input accepts; parse_input(to_json(d)) == d for a
/// normalized document.
nlohmann::ordered_json to_json(const InputDocument& doc);

/// Polarized data with D3, Dc2 filled in (solved from h0 if needed).
/// Throws ValidationError when the basket is invalid.
PolarizedData resolve(const InputDocument& doc);

}  // namespace orbirr
