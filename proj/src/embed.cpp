#include "orbirr/embed.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbirr/basket.hpp"

namespace orbirr {

ClearResult clear_weights(const HilbertSeries& hs, std::span<const int> weights) {
  if (weights.empty()) throw std::invalid_argument("clear_weights: empty weight list");
  const RationalFunction r = hs.closed.reduced().times_weights(weights);
  ClearResult out;
  if (r.denominator_factors().empty())
    out.numerator = r.numerator();
  else
    out.residual = r.denominator_factors();
  return out;
}

Symmetry check_symmetry(const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("check_symmetry: zero polynomial");
  const Poly rev = q.reversed();
  if (rev == q) return {true, 1};
  if (rev == -q) return {true, -1};
  return {false, std::nullopt};
}

EmbeddingCandidate make_candidate(std::vector<int> weights, Poly numerator) {
  std::sort(weights.begin(), weights.end());
  EmbeddingCandidate c;
  c.codimension = static_cast<int>(weights.size()) - 4;
  c.well_formed = is_well_formed(WeightedSpace{weights});
  const Symmetry sym = check_symmetry(numerator);
  c.symmetric = sym.symmetric;
  c.symmetry_sign = sym.sign;
  c.weights = std::move(weights);
  c.numerator = std::move(numerator);
  return c;
}

SearchOutcome greedy_weights(const HilbertSeries& hs, const SearchOptions& opts) {
  SearchOutcome out;
  out.residual = hs.closed.reduced();
  if (hs.source.D3 <= 0) {
    out.failure = "D^3 = " + to_string(hs.source.D3) + " <= 0: polarization is not ample";
    return out;
  }
  {
    const TruncSeries p = series_of(out.residual, opts.max_degree);
    for (int i = 0; i <= p.order(); ++i)
      if (p[i] < 0) throw std::invalid_argument("greedy_weights: Hilbert series has a negative coefficient at t^" +
                                                std::to_string(i));
  }

  while (!out.residual.denominator_factors().empty()) {
    const TruncSeries ser = series_of(out.residual, opts.max_degree);
    std::optional<int> d;
    for (int i = 1; i <= ser.order(); ++i)
      if (ser[i] > 0) {
        d = i;
        break;
      }

    int pole_period = 0;
    for (const auto& [e, mult] : out.residual.denominator_factors().exponents())
      if (!d || *d % e != 0) pole_period = std::max(pole_period, e);

    SearchStep step;
    if (d && (pole_period == 0 || *d <= pole_period)) {
      if (!is_integer(ser[*d])) {
        out.failure = "non-integral coefficient " + to_string(ser[*d]) + " at t^" + std::to_string(*d);
        return out;
      }
      step = {*d, static_cast<int>(to_long(ser[*d])), SearchStep::Rule::positive_coefficient};
    } else {
      step = {pole_period, 1, SearchStep::Rule::pole_completion};
    }

    if (static_cast<int>(out.weights.size()) + step.count > opts.max_weights) {
      out.failure = "weight limit " + std::to_string(opts.max_weights) + " exceeded";
      return out;
    }
    if (step.weight > opts.max_degree) {
      out.failure = "degree limit " + std::to_string(opts.max_degree) + " exceeded";
      return out;
    }
    const std::vector<int> added(static_cast<std::size_t>(step.count), step.weight);
    out.residual = out.residual.times_weights(added);
    out.weights.insert(out.weights.end(), added.begin(), added.end());
    out.steps.push_back(step);
  }

  std::sort(out.weights.begin(), out.weights.end());
  const ClearResult cleared = clear_weights(hs, out.weights);
  if (!cleared.is_polynomial()) throw std::logic_error("greedy_weights: chosen weights do not clear the series");
  out.candidate = make_candidate(out.weights, *cleared.numerator);
  return out;
}

RelationReport suggest_relations(const Poly& numerator) {
  RelationReport rep;
  for (int d = 1; d <= numerator.degree(); ++d) {
    const Rat c = numerator.coeff(d);
    if (c > 0) break;
    if (c < 0) {
      const long count = to_long(-c);
      rep.degrees.insert(rep.degrees.end(), static_cast<std::size_t>(count), d);
    }
  }
  return rep;
}

RelationReport suggest_relations(const EmbeddingCandidate& candidate) { return suggest_relations(candidate.numerator); }

}  // namespace orbirr
