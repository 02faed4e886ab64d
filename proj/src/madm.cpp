#include "hfsim/madm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hfsim/error.hpp"

namespace hfsim {

DecisionProblem::DecisionProblem(std::vector<std::string> attributes,
                                 std::vector<Alternative> alternatives, WeightVector weights)
    : attributes_(std::move(attributes)),
      alternatives_(std::move(alternatives)),
      weights_(std::move(weights)) {
  if (attributes_.empty()) throw InvalidProblem("decision problem needs at least one attribute");
  if (alternatives_.size() < 2) throw InvalidProblem("decision problem needs at least two alternatives");
  if (weights_.size() != attributes_.size()) {
    throw InvalidProblem("got " + std::to_string(weights_.size()) + " weights for " +
                         std::to_string(attributes_.size()) + " attributes");
  }
  std::set<std::string_view> names;
  for (const auto& alt : alternatives_) {
    if (!names.insert(alt.name).second) {
      throw InvalidProblem("duplicate alternative '" + alt.name + "'");
    }
    const auto& ev = alt.evaluations;
    if (ev.size() != attributes_.size()) {
      throw InvalidProblem("alternative '" + alt.name + "' has " + std::to_string(ev.size()) +
                           " evaluations for " + std::to_string(attributes_.size()) +
                           " attributes");
    }
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (ev.id(i) != attributes_[i]) {
        throw InvalidProblem("alternative '" + alt.name + "' evaluates '" + ev.id(i) +
                             "' where attribute '" + attributes_[i] + "' is expected");
      }
    }
  }
}

IdealSets ideal_sets(std::span<const HesitantSet> sets, ExtensionPolicy policy) {
  if (sets.empty()) throw InvalidProblem("ideal sets need at least one alternative");
  const HesitantSet& first = sets.front();
  std::vector<HesitantSet::Entry> positive;
  std::vector<HesitantSet::Entry> negative;

  for (std::size_t i = 0; i < first.size(); ++i) {
    const std::string& id = first.id(i);
    std::vector<const HesitantElement*> column;
    for (const auto& s : sets) {
      const std::size_t j = s.index_of(id);
      if (j == s.size() || s.size() != first.size()) {
        throw UniverseMismatch("alternatives do not share the attribute '" + id + "'");
      }
      column.push_back(&s.element(j));
    }
    std::size_t n = 0;
    for (const auto* e : column) n = std::max(n, e->size());

    std::vector<double> hi(n, 0.0);
    std::vector<double> lo(n, 1.0);
    for (const auto* e : column) {
      const auto ext = extend_to(*e, n, policy);
      for (std::size_t k = 0; k < n; ++k) {
        hi[k] = std::max(hi[k], ext[k]);
        lo[k] = std::min(lo[k], ext[k]);
      }
    }
    positive.emplace_back(id, make_element(hi, false));
    negative.emplace_back(id, make_element(lo, false));
  }
  return {HesitantSet(std::move(positive)), HesitantSet(std::move(negative))};
}

IdealSets ideal_alternatives(const DecisionProblem& problem, ExtensionPolicy policy) {
  std::vector<HesitantSet> sets;
  sets.reserve(problem.alternatives().size());
  for (const auto& alt : problem.alternatives()) sets.push_back(alt.evaluations);
  return ideal_sets(sets, policy);
}

RankingResult relative_similarity(const DecisionProblem& problem, SimilaritySpec spec,
                                  ExtensionPolicy policy) {
  if (spec.family == SimilarityFamily::from_distance) {
    if (is_weighted(spec.base.family)) spec.base.weights = problem.weights();
  } else if (spec.weighting == Weighting::weighted) {
    spec.weights = problem.weights();
  }

  const auto ideals = ideal_alternatives(problem, policy);
  RankingResult result;
  result.measure = spec;
  result.p = spec.family == SimilarityFamily::from_distance ? spec.base.p : spec.p;

  for (const auto& alt : problem.alternatives()) {
    const double to_best = similarity(ideals.positive, alt.evaluations, spec, policy);
    const double to_worst = similarity(ideals.negative, alt.evaluations, spec, policy);
    if (to_best + to_worst == 0.0) {
      throw DegenerateScores("alternative '" + alt.name +
                             "' has zero similarity to both ideal alternatives");
    }
    result.scores.push_back(to_best / (to_best + to_worst));
  }

  result.order.resize(result.scores.size());
  std::iota(result.order.begin(), result.order.end(), std::size_t{0});
  // Scores equal up to round-off count as tied and keep input order.
  std::vector<double> keys;
  for (double s : result.scores) keys.push_back(std::round(s * kTieResolution));
  std::stable_sort(result.order.begin(), result.order.end(),
                   [&](std::size_t x, std::size_t y) { return keys[x] > keys[y]; });
  return result;
}

std::string ranking_string(const DecisionProblem& problem, const RankingResult& result) {
  std::string out;
  for (std::size_t k = 0; k < result.order.size(); ++k) {
    if (k > 0) out += " ≻ ";
    out += problem.alternatives()[result.order[k]].name;
  }
  return out;
}

}  // namespace hfsim
