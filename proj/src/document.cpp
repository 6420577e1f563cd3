#include "orbirr/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "orbirr/fixtures.hpp"

namespace orbirr {
namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw ParseError(where + ": unknown key '" + key + "'");
}

Rat read_rat(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

long read_long(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<long>();
}

int read_int(const json& j, const std::string& where) {
  const long v = read_long(j, where);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(where + ": integer out of range");
  return static_cast<int>(v);
}

Rat optional_rat(const json& j, const char* key, const std::string& where) {
  return j.contains(key) ? read_rat(j.at(key), where + "." + key) : Rat(0);
}

PointBasketEntry read_point(const json& j, const std::string& where) {
  check_keys(j, {"s", "a", "n", "multiplicity"}, where);
  for (const char* key : {"s", "a", "n"})
    if (!j.contains(key)) throw ParseError(where + ": missing '" + key + "'");
  PointBasketEntry p;
  p.s = read_int(j.at("s"), where + ".s");
  const json& a = j.at("a");
  if (!a.is_array() || a.size() != 3) throw ParseError(where + ".a: expected three integers");
  for (std::size_t i = 0; i < 3; ++i) p.a[i] = read_int(a[i], where + ".a");
  p.n = read_int(j.at("n"), where + ".n");
  p.multiplicity = j.contains("multiplicity") ? read_int(j.at("multiplicity"), where + ".multiplicity") : 1;
  return p;
}

CurveBasketEntry read_curve(const json& j, const std::string& where) {
  check_keys(j, {"r", "k", "degD", "degK", "tau", "N"}, where);
  for (const char* key : {"r", "k", "degD"})
    if (!j.contains(key)) throw ParseError(where + ": missing '" + key + "'");
  CurveBasketEntry c;
  c.r = read_int(j.at("r"), where + ".r");
  c.k = read_int(j.at("k"), where + ".k");
  c.degD = read_rat(j.at("degD"), where + ".degD");
  c.degK = optional_rat(j, "degK", where);
  c.tau = j.contains("tau") ? read_int(j.at("tau"), where + ".tau") : 1;
  c.N = j.contains("N") ? read_long(j.at("N"), where + ".N") : 0;
  return c;
}

}  // namespace

InputDocument parse_input(const json& j) {
  check_keys(j, {"name", "notes", "calabi_yau", "h0", "D3", "Dc2", "D2K", "DK2", "chiO", "points", "curves"}, "input");
  InputDocument doc;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("input.name: expected a string");
    doc.name = j.at("name").get<std::string>();
  }
  if (j.contains("notes")) {
    if (!j.at("notes").is_string()) throw ParseError("input.notes: expected a string");
    doc.notes = j.at("notes").get<std::string>();
  }

  const bool has_h0 = j.contains("h0");
  const bool has_d3 = j.contains("D3") || j.contains("Dc2");
  if (has_h0 == has_d3) throw ParseError("input: give exactly one of h0 or (D3, Dc2)");
  if (has_h0) {
    const json& h = j.at("h0");
    if (!h.is_array() || h.size() != 2) throw ParseError("input.h0: expected [h0(D), h0(2D)]");
    doc.h0 = std::array<long, 2>{read_long(h[0], "input.h0"), read_long(h[1], "input.h0")};
  } else {
    if (!j.contains("D3") || !j.contains("Dc2")) throw ParseError("input: D3 and Dc2 must both be given");
    doc.data.D3 = read_rat(j.at("D3"), "input.D3");
    doc.data.Dc2 = read_rat(j.at("Dc2"), "input.Dc2");
  }

  if (j.contains("calabi_yau")) {
    if (!j.at("calabi_yau").is_boolean()) throw ParseError("input.calabi_yau: expected a boolean");
    doc.data.calabi_yau = j.at("calabi_yau").get<bool>();
  } else {
    doc.data.calabi_yau = has_h0;
  }
  if (has_h0 && !doc.data.calabi_yau) throw ParseError("input: h0 input requires calabi_yau = true");

  doc.data.D2K = optional_rat(j, "D2K", "input");
  doc.data.DK2 = optional_rat(j, "DK2", "input");
  doc.data.chiO = optional_rat(j, "chiO", "input");

  if (j.contains("points")) {
    if (!j.at("points").is_array()) throw ParseError("input.points: expected an array");
    for (std::size_t i = 0; i < j.at("points").size(); ++i)
      doc.data.points.push_back(read_point(j.at("points")[i], "input.points[" + std::to_string(i) + "]"));
  }
  if (j.contains("curves")) {
    if (!j.at("curves").is_array()) throw ParseError("input.curves: expected an array");
    for (std::size_t i = 0; i < j.at("curves").size(); ++i)
      doc.data.curves.push_back(read_curve(j.at("curves")[i], "input.curves[" + std::to_string(i) + "]"));
  }
  doc.data = normalized(std::move(doc.data));
  return doc;
}

InputDocument parse_input_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(j);
}

InputDocument load_input(const std::string& path) {
  constexpr std::string_view prefix = "builtin:";
  if (path.rfind(prefix, 0) == 0) {
    const auto fixture = find_fixture(std::string_view(path).substr(prefix.size()));
    if (!fixture) throw ParseError("unknown built-in fixture '" + path + "'");
    InputDocument doc;
    doc.name = fixture->name;
    doc.h0 = std::array<long, 2>{fixture->h1, fixture->h2};
    doc.data.calabi_yau = true;
    doc.data.points = fixture->points;
    doc.data.curves = fixture->curves;
    doc.data = normalized(std::move(doc.data));
    return doc;
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

nlohmann::ordered_json to_json(const InputDocument& doc) {
  nlohmann::ordered_json j;
  j["name"] = doc.name;
  if (!doc.notes.empty()) j["notes"] = doc.notes;
  j["calabi_yau"] = doc.data.calabi_yau;
  if (doc.h0) {
    j["h0"] = {(*doc.h0)[0], (*doc.h0)[1]};
  } else {
    j["D3"] = to_string(doc.data.D3);
    j["Dc2"] = to_string(doc.data.Dc2);
  }
  j["D2K"] = to_string(doc.data.D2K);
  j["DK2"] = to_string(doc.data.DK2);
  j["chiO"] = to_string(doc.data.chiO);
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : doc.data.points)
    j["points"].push_back({{"s", p.s}, {"a", {p.a[0], p.a[1], p.a[2]}}, {"n", p.n}, {"multiplicity", p.multiplicity}});
  j["curves"] = nlohmann::ordered_json::array();
  for (const auto& c : doc.data.curves)
    j["curves"].push_back({{"r", c.r},
                           {"k", c.k},
                           {"degD", to_string(c.degD)},
                           {"degK", to_string(c.degK)},
                           {"tau", c.tau},
                           {"N", c.N}});
  return j;
}

PolarizedData resolve(const InputDocument& doc) {
  PolarizedData d = normalized(doc.data);
  require_valid(d);
  if (doc.h0) {
    const auto inv = solve_invariants((*doc.h0)[0], (*doc.h0)[1], d.points, d.curves);
    d.D3 = inv.D3;
    d.Dc2 = inv.Dc2;
  }
  return d;
}

}  // namespace orbirr
