#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbirr/hilbert.hpp"
#include "orbirr/poly.hpp"
#include "orbirr/rational_function.hpp"

namespace orbirr {

struct EmbeddingCandidate {
  std::vector<int> weights;  ///< ascending
  Poly numerator;            ///< Q(t) = P(t) prod (1 - t^w)
  int codimension = 0;       ///< |weights| - 4
  bool well_formed = false;
  bool symmetric = false;
  std::optional<int> symmetry_sign;
};

struct ClearResult {
  std::optional<Poly> numerator;
  /// Part of the reduced denominator that prod (1 - t^w) fails to cancel;
  /// empty on success.
  CycloProduct residual;

  bool is_polynomial() const { return numerator.has_value(); }
};

/// Q(t) = P(t) prod (1 - t^w) if that is a polynomial. Throws
/// std::invalid_argument for an empty or non-positive weight list.
ClearResult clear_weights(const HilbertSeries& hs, std::span<const int> weights);

/// Fills codimension, well-formedness and symmetry for a cleared numerator.
EmbeddingCandidate make_candidate(std::vector<int> weights, Poly numerator);

struct SearchOptions {
  int max_degree = 100;
  int max_weights = 20;
};

struct SearchStep {
  enum class Rule { positive_coefficient, pole_completion };
  int weight = 0;
  int count = 0;
  Rule rule = Rule::positive_coefficient;
};

struct SearchOutcome {
  std::optional<EmbeddingCandidate> candidate;
  std::vector<int> weights;  ///< chosen so far (all of them on success)
  std::vector<SearchStep> steps;
  RationalFunction residual;  ///< P(t) prod (1 - t^w) over `weights`
  std::string failure;        ///< empty on success

  bool found() const { return candidate.has_value(); }
};

/// Lowest-degree-first generator search. The state R = P prod (1 - t^w) is
/// kept as an exact rational function. Each round, with d the lowest
/// degree >= 1 where R has a positive coefficient and E the periods of R's
/// denominator that do not divide d:
///   - if d exists and (E is empty or d <= max E), adjoin coeff_d copies of d;
///   - otherwise adjoin one weight max E, since a generator of that degree
///     is needed to clear the pole and is hidden by relations of the same
///     degree.
/// Stops when R is a polynomial. Failure (not an exception) when D^3 <= 0,
/// a coefficient is not an integer, or the limits are exceeded. Throws
/// std::invalid_argument if the series has a negative coefficient below
/// max_degree.
SearchOutcome greedy_weights(const HilbertSeries& hs, const SearchOptions& opts = {});

struct Symmetry {
  bool symmetric = false;
  std::optional<int> sign;
};

/// q(t) = sign * t^deg(q) * q(1/t)? Throws std::invalid_argument for zero.
Symmetry check_symmetry(const Poly& q);

/// Relation degrees read off the first negative band of a numerator: after
/// the constant term, every degree d with c_d < 0 up to the first positive
/// coefficient yields |c_d| relations of degree d. Only a heuristic; deeper
/// syzygies make later bands non-literal.
struct RelationReport {
  std::vector<int> degrees;  ///< ascending, with repetition
  bool heuristic = true;
};

RelationReport suggest_relations(const Poly& numerator);
RelationReport suggest_relations(const EmbeddingCandidate& candidate);

}  // namespace orbirr
