#include "orbirr/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "orbirr/document.hpp"
#include "orbirr/embed.hpp"
#include "orbirr/hilbert.hpp"
#include "orbirr/riemann_roch.hpp"

namespace orbirr::cli {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

struct Options {
  std::string input;
  bool json = false;
  bool verbose = false;
  long m_max = 10;
  int max_degree = 100;
  int max_weights = 20;
  std::vector<int> weights;
  std::string batch_dir;
  std::string out_path;
};

ojson rat_list(std::span<const Rat> xs) {
  ojson a = ojson::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

ojson poly_json(const Poly& p) { return rat_list(p.coefficients()); }

ojson validation_json(const ValidationReport& rep) {
  ojson a = ojson::array();
  for (const auto& v : rep.items)
    a.push_back({{"severity", v.severity == Violation::Severity::error ? "error" : "warning"},
                 {"location", v.location},
                 {"message", v.message}});
  return a;
}

std::string weights_text(std::span<const int> ws) {
  std::string s;
  for (int w : ws) s += (s.empty() ? "" : ",") + std::to_string(w);
  return s;
}

/// "(1-t)^3 (1-t^3)^2 (1-t^5)" for an ascending weight list.
std::string factored_denominator(std::span<const int> ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size();) {
    std::size_t j = i;
    while (j < ws.size() && ws[j] == ws[i]) ++j;
    if (!out.empty()) out += " ";
    out += ws[i] == 1 ? "(1-t)" : "(1-t^" + std::to_string(ws[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "1" : out;
}

long period_lcm(const PolarizedData& d) {
  long l = 1;
  for (const auto& p : d.points) l = std::lcm(l, static_cast<long>(p.s));
  for (const auto& c : d.curves) l = std::lcm(l, static_cast<long>(c.r));
  return l;
}

/// Result of one pipeline run: a JSON report, a human rendering and an exit code.
struct Outcome {
  ojson report;
  std::string text;
  int code = kOk;
};

struct Loaded {
  InputDocument doc;
  PolarizedData data;
  ValidationReport validation;
};

ojson invariants_json(const Loaded& l) {
  return {{"D3", to_string(l.data.D3)}, {"Dc2", to_string(l.data.Dc2)}, {"derived_from_h0", l.doc.h0.has_value()}};
}

/// Parses, validates and resolves; on failure fills `fail` and returns nullopt.
std::optional<Loaded> load(const std::string& path, Outcome& fail) {
  Loaded l;
  try {
    l.doc = load_input(path);
  } catch (const ParseError& e) {
    fail.code = kParseError;
    fail.report["status"] = "parse_error";
    fail.report["error"] = e.what();
    fail.text = std::string("parse error: ") + e.what() + "\n";
    return std::nullopt;
  }
  fail.report["input"] = to_json(l.doc);
  l.validation = validate(l.doc.data);
  fail.report["validation"] = validation_json(l.validation);
  if (!l.validation.ok()) {
    fail.code = kValidationError;
    fail.report["status"] = "validation_error";
    fail.text = "validation failed:\n" + l.validation.to_string();
    return std::nullopt;
  }
  l.data = resolve(l.doc);
  return l;
}

Outcome cmd_chi(const Options& o) {
  Outcome res;
  auto l = load(o.input, res);
  if (!l) return res;
  res.report["invariants"] = invariants_json(*l);

  const RiemannRoch rr(l->data);
  const char* label = l->data.calabi_yau ? "h0" : "chi";
  std::ostringstream os;
  os << "# " << (l->doc.name.empty() ? o.input : l->doc.name) << "  D3=" << to_string(l->data.D3)
     << "  D.c2=" << to_string(l->data.Dc2) << "\n";
  os << "m\t" << label << "\n";
  ojson rows = ojson::array();
  for (long m = 1; m <= o.m_max; ++m) {
    const ChiResult c = rr.chi(m);
    ojson row = {{"m", m}, {"value", to_string(c.value)}};
    os << m << "\t" << to_string(c.value);
    if (o.verbose) {
      row["breakdown"] = {{"polynomial_part", to_string(c.breakdown.polynomial_part)},
                          {"points", rat_list(c.breakdown.point_contribs)},
                          {"curves", rat_list(c.breakdown.curve_contribs)}};
      os << "\tpoly=" << to_string(c.breakdown.polynomial_part);
      for (const auto& v : c.breakdown.point_contribs) os << "\tc_P=" << to_string(v);
      for (const auto& v : c.breakdown.curve_contribs) os << "\ts_C=" << to_string(v);
    }
    os << "\n";
    rows.push_back(std::move(row));
  }
  res.report["quantity"] = label;
  res.report["chi"] = std::move(rows);
  res.report["status"] = "ok";
  res.text = os.str();
  return res;
}

ojson hilbert_json(const HilbertSeries& hs, const std::vector<int>& display_weights, const Poly& display_num,
                   long terms) {
  const TruncSeries ser = series_of(hs.closed, static_cast<int>(terms));
  return {{"numerator", poly_json(display_num)},
          {"denominator_weights", display_weights},
          {"assembly_weights", hs.denominator_weights},
          {"reduced_denominator", to_string(hs.closed.denominator_factors())},
          {"series", rat_list(ser.coefficients())}};
}

std::string hilbert_text(const HilbertSeries& hs, const std::vector<int>& ws, const Poly& num, long terms) {
  std::ostringstream os;
  os << "P(t) = (" << to_string(num) << ") / " << factored_denominator(ws) << "\n";
  const TruncSeries ser = series_of(hs.closed, static_cast<int>(terms));
  os << "     = " << to_string(Poly(std::vector<Rat>(ser.coefficients().begin(), ser.coefficients().end())))
     << " + O(t^" << terms + 1 << ")\n";
  return os.str();
}

/// Requires CY data; on failure fills `res` and returns nullopt.
std::optional<HilbertSeries> hilbert_of(const Loaded& l, Outcome& res) {
  if (!l.data.calabi_yau) {
    res.code = kValidationError;
    res.report["status"] = "validation_error";
    res.report["error"] = "the closed-form Hilbert series needs calabi_yau = true";
    res.text = "error: the closed-form Hilbert series needs calabi_yau = true\n";
    return std::nullopt;
  }
  return assemble(l.data);
}

Outcome cmd_hilbert(const Options& o) {
  Outcome res;
  auto l = load(o.input, res);
  if (!l) return res;
  res.report["invariants"] = invariants_json(*l);
  auto hs = hilbert_of(*l, res);
  if (!hs) return res;
  const std::vector<int> ws = covering_weights(hs->closed.denominator_factors());
  const Poly num = ws.empty() ? hs->closed.numerator() : *clear_weights(*hs, ws).numerator;
  res.report["hilbert"] = hilbert_json(*hs, ws, num, o.m_max);
  res.report["status"] = "ok";
  res.text = "D3 = " + to_string(l->data.D3) + ", D.c2 = " + to_string(l->data.Dc2) + "\n" +
             hilbert_text(*hs, ws, num, o.m_max);
  return res;
}

ojson candidate_json(const EmbeddingCandidate& c) {
  ojson j = {{"weights", c.weights},
             {"numerator", poly_json(c.numerator)},
             {"numerator_text", to_string(c.numerator)},
             {"codimension", c.codimension},
             {"well_formed", c.well_formed},
             {"symmetric", c.symmetric},
             {"symmetry_sign", c.symmetry_sign ? ojson(*c.symmetry_sign) : ojson(nullptr)}};
  const RelationReport rel = suggest_relations(c);
  j["relations"] = {{"heuristic", true}, {"degrees", rel.degrees}};
  return j;
}

std::string candidate_text(const EmbeddingCandidate& c) {
  std::ostringstream os;
  os << "weights: P(" << weights_text(c.weights) << ")  codimension " << c.codimension
     << (c.well_formed ? "  well formed" : "  NOT well formed") << "\n";
  os << "Q(t) = " << to_string(c.numerator) << "\n";
  os << "P(t) = Q(t) / " << factored_denominator(c.weights) << "\n";
  os << "symmetry: ";
  if (c.symmetric)
    os << "Q(t) = " << (*c.symmetry_sign > 0 ? "+" : "-") << "t^" << c.numerator.degree() << " Q(1/t)\n";
  else
    os << "none\n";
  os << "relations (heuristic): ";
  const auto rel = suggest_relations(c).degrees;
  if (rel.empty()) os << "none";
  for (std::size_t i = 0; i < rel.size(); ++i) os << (i ? "," : "") << rel[i];
  os << "\n";
  return os.str();
}

Outcome cmd_search_one(const Options& o, const std::string& path) {
  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  auto l = load(path, res);
  if (!l) return res;
  res.report["invariants"] = invariants_json(*l);
  auto hs = hilbert_of(*l, res);
  if (!hs) return res;
  std::ostringstream os;
  os << "# " << (l->doc.name.empty() ? path : l->doc.name) << "  D3=" << to_string(l->data.D3)
     << "  D.c2=" << to_string(l->data.Dc2) << "\n";

  const std::vector<int> cover = covering_weights(hs->closed.denominator_factors());
  res.report["hilbert"] =
      hilbert_json(*hs, cover, cover.empty() ? hs->closed.numerator() : *clear_weights(*hs, cover).numerator, 10);

  if (!o.weights.empty()) {
    std::vector<int> ws = o.weights;
    std::sort(ws.begin(), ws.end());
    const ClearResult cr = clear_weights(*hs, ws);
    if (!cr.is_polynomial()) {
      res.code = kSearchFailure;
      res.report["status"] = "not_polynomial";
      res.report["search"] = {{"mode", "explicit"},
                              {"weights", ws},
                              {"residual_denominator", to_string(cr.residual)}};
      os << "NOT_POLYNOMIAL: P(t) * prod(1-t^w) over w = " << weights_text(ws)
         << " still has denominator " << to_string(cr.residual) << "\n";
    } else {
      const EmbeddingCandidate c = make_candidate(ws, *cr.numerator);
      res.report["status"] = "ok";
      res.report["search"] = {{"mode", "explicit"}, {"weights", ws}};
      res.report["candidate"] = candidate_json(c);
      os << candidate_text(c);
    }
  } else {
    const SearchOutcome so = greedy_weights(*hs, SearchOptions{o.max_degree, o.max_weights});
    ojson steps = ojson::array();
    for (const auto& s : so.steps)
      steps.push_back({{"weight", s.weight},
                       {"count", s.count},
                       {"rule", s.rule == SearchStep::Rule::pole_completion ? "pole_completion" : "positive_coefficient"}});
    res.report["search"] = {{"mode", "greedy"}, {"steps", steps}};
    if (so.found()) {
      res.report["status"] = "ok";
      res.report["candidate"] = candidate_json(*so.candidate);
      os << candidate_text(*so.candidate);
    } else {
      res.code = kSearchFailure;
      res.report["status"] = "search_failure";
      res.report["search"]["failure"] = so.failure;
      res.report["search"]["partial_weights"] = so.weights;
      res.report["search"]["residual_numerator"] = poly_json(so.residual.numerator());
      res.report["search"]["residual_denominator"] = to_string(so.residual.denominator_factors());
      os << "FAILURE: " << so.failure << "\npartial weights: " << weights_text(so.weights) << "\n";
    }
  }
  res.report["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  res.text = os.str();
  return res;
}

Outcome cmd_check(const Options& o) {
  Outcome res;
  auto l = load(o.input, res);
  if (!l) {
    if (res.code == kValidationError) res.text = "FAIL " + res.text;
    return res;
  }
  res.report["invariants"] = invariants_json(*l);
  std::ostringstream os;
  os << "PASS validation\n";
  ojson checks = ojson::array();
  checks.push_back({{"name", "validation"}, {"pass", true}});

  const RiemannRoch rr(l->data);
  const long scan = 2 * period_lcm(l->data);
  std::optional<long> bad_m;
  for (long m = 1; m <= scan && !bad_m; ++m)
    if (!is_integer(rr.value(m))) bad_m = m;
  ojson integ = {{"name", "integrality"}, {"pass", !bad_m}, {"range", {1, scan}}};
  if (bad_m) {
    integ["first_failure"] = {{"m", *bad_m}, {"value", to_string(rr.value(*bad_m))}};
    os << "FAIL integrality: chi(" << *bad_m << ") = " << to_string(rr.value(*bad_m)) << " is not an integer\n";
    res.code = kCheckFailure;
  } else {
    os << "PASS integrality for m in [1, " << scan << "]\n";
  }
  checks.push_back(std::move(integ));

  if (l->data.calabi_yau) {
    const HilbertSeries hs = assemble(l->data);
    const int order = std::max(verification_order(l->data), 200);
    const auto mismatch = first_mismatch(hs, order);
    ojson cons = {{"name", "closed_form_vs_direct_sum"}, {"pass", !mismatch}, {"order", order}};
    if (mismatch) {
      cons["first_failure"] = *mismatch;
      os << "FAIL closed form differs from direct sum at m = " << *mismatch << "\n";
      res.code = kCheckFailure;
    } else {
      os << "PASS closed form agrees with direct sum to order " << order << "\n";
    }
    checks.push_back(std::move(cons));
  } else {
    checks.push_back({{"name", "closed_form_vs_direct_sum"}, {"skipped", "not calabi_yau"}});
    os << "SKIP closed form (not calabi_yau)\n";
  }
  res.report["checks"] = std::move(checks);
  res.report["status"] = res.code == kOk ? "ok" : "check_failure";
  res.text = os.str();
  return res;
}

int emit(const Outcome& res, const Options& o, std::ostream& out, std::ostream& err) {
  std::ostream* sink = &out;
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "cannot write '" << o.out_path << "'\n";
      return kInternalError;
    }
    sink = &file;
  }
  if (o.json)
    *sink << res.report.dump(2) << "\n";
  else
    *sink << res.text;
  if (res.code != kOk && !o.json && sink == &out) err << "exit status " << res.code << "\n";
  return res.code;
}

int run_batch(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(o.batch_dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) {
    err << "cannot read directory '" << o.batch_dir << "': " << ec.message() << "\n";
    return kParseError;
  }
  std::sort(files.begin(), files.end());

  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [&o, f] {
      try {
        return cmd_search_one(o, f.string());
      } catch (const std::exception& e) {
        Outcome bad;
        bad.code = kInternalError;
        bad.report["status"] = "internal_error";
        bad.report["error"] = e.what();
        return bad;
      }
    }));

  if (!o.out_path.empty()) fs::create_directories(o.out_path, ec);
  std::ostringstream csv;
  csv << "file,name,status,D3,Dc2,weights,codimension,symmetric\n";
  int worst = kOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Outcome res = jobs[i].get();
    worst = std::max(worst, res.code);
    const ojson& r = res.report;
    auto field = [&](const char* obj, const char* key) -> std::string {
      if (!r.contains(obj) || !r.at(obj).contains(key)) return "";
      const auto& v = r.at(obj).at(key);
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    std::string weights, codim, sym;
    if (r.contains("candidate")) {
      std::vector<int> ws = r.at("candidate").at("weights").get<std::vector<int>>();
      weights = "\"" + weights_text(ws) + "\"";
      codim = r.at("candidate").at("codimension").dump();
      sym = r.at("candidate").at("symmetric").dump();
    }
    const std::string name = r.contains("input") ? r.at("input").value("name", "") : "";
    csv << files[i].filename().string() << "," << name << "," << r.value("status", "") << ","
        << field("invariants", "D3") << "," << field("invariants", "Dc2") << "," << weights << "," << codim << ","
        << sym << "\n";
    if (!o.out_path.empty()) {
      std::ofstream f(fs::path(o.out_path) / (files[i].stem().string() + ".json"));
      f << r.dump(2) << "\n";
    }
  }
  if (!o.out_path.empty()) {
    std::ofstream f(fs::path(o.out_path) / "summary.csv");
    f << csv.str();
  } else {
    out << csv.str();
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold Riemann-Roch, Hilbert series and weighted embedding search for polarized 3-folds"};
  app.name("orbirr");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", o.input, "input JSON file, or builtin:NAME");
    if (input_required) in->required();
    sub->add_flag("--json", o.json, "emit a JSON report on standard output");
    sub->add_flag("--verbose", o.verbose, "per-term breakdown");
    sub->add_option("--out", o.out_path, "write the report to PATH (a directory in batch mode)");
  };

  auto* chi_cmd = app.add_subcommand("chi", "table of chi(mD) (h^0(mD) for Calabi-Yau input)");
  add_common(chi_cmd, true);
  chi_cmd->add_option("--m-max", o.m_max, "largest m")->check(CLI::PositiveNumber);

  auto* hil_cmd = app.add_subcommand("hilbert", "closed-form Hilbert series");
  add_common(hil_cmd, true);
  hil_cmd->add_option("--m-max", o.m_max, "number of series terms shown")->check(CLI::PositiveNumber);

  auto* search_cmd = app.add_subcommand("search", "weighted projective embedding search");
  add_common(search_cmd, false);
  search_cmd->add_option("--max-degree", o.max_degree, "largest generator degree")->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-weights", o.max_weights, "largest number of generators")->check(CLI::PositiveNumber);
  search_cmd->add_option("--weights", o.weights, "clear against these weights instead of searching")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--batch", o.batch_dir, "process every *.json file in DIR");

  auto* check_cmd = app.add_subcommand("check", "validation and self-consistency checks");
  add_common(check_cmd, true);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (search_cmd->parsed() && !o.batch_dir.empty()) {
      if (!o.input.empty()) {
        err << "--batch and an input file are mutually exclusive\n";
        return kParseError;
      }
      return run_batch(o, out, err);
    }
    if (o.input.empty()) {
      err << "an input file is required\n";
      return kParseError;
    }
    Outcome res;
    if (chi_cmd->parsed())
      res = cmd_chi(o);
    else if (hil_cmd->parsed())
      res = cmd_hilbert(o);
    else if (search_cmd->parsed())
      res = cmd_search_one(o, o.input);
    else
      res = cmd_check(o);
    return emit(res, o, out, err);
  } catch (const ValidationError& e) {
    err << e.what();
    return kValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace orbirr::cli
