#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hfsim/hesitant.hpp"
#include "hfsim/similarity.hpp"
#include "hfsim/weights.hpp"

namespace hfsim {

struct Alternative {
  std::string name;
  HesitantSet evaluations;

  friend bool operator==(const Alternative&, const Alternative&) = default;
};

/// Alternatives evaluated on a common attribute universe, plus attribute weights.
/// All attributes are benefit-type.
class DecisionProblem {
public:
  /// Throws InvalidProblem unless there are >= 2 uniquely named alternatives, each
  /// covering exactly `attributes` (in that order), and one weight per attribute.
  DecisionProblem(std::vector<std::string> attributes, std::vector<Alternative> alternatives,
                  WeightVector weights);

  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  const std::vector<Alternative>& alternatives() const noexcept { return alternatives_; }
  const WeightVector& weights() const noexcept { return weights_; }

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;

private:
  std::vector<std::string> attributes_;
  std::vector<Alternative> alternatives_;
  WeightVector weights_;
};

struct IdealSets {
  HesitantSet positive;
  HesitantSet negative;
};

/// Per attribute, extends every set's element to the longest length there, then
/// takes the positionwise max (positive ideal) and min (negative ideal).
/// Sets must share one universe; throws InvalidProblem on an empty span.
IdealSets ideal_sets(std::span<const HesitantSet> sets, ExtensionPolicy policy);

IdealSets ideal_alternatives(const DecisionProblem& problem,
                             ExtensionPolicy policy = ExtensionPolicy::pessimistic);

/// Scores are compared after rounding to multiples of 1/kTieResolution.
inline constexpr double kTieResolution = 1e12;

struct RankingResult {
  /// s_i = s(H+,H_i) / (s(H+,H_i) + s(H-,H_i)), in alternative order.
  std::vector<double> scores;
  /// Alternative indices, best first; ties keep input order.
  std::vector<std::size_t> order;
  SimilaritySpec measure;
  double p = 1.0;
};

/// Scores and ranks every alternative by relative similarity to the ideals.
/// A weighted measure (or a from-distance measure over a weighted family) gets
/// the problem's attribute weights. Throws DegenerateScores when both
/// similarities of some alternative are zero.
RankingResult relative_similarity(const DecisionProblem& problem, SimilaritySpec spec,
                                  ExtensionPolicy policy = ExtensionPolicy::pessimistic);

/// "H5 ≻ H3 ≻ ..." using alternative names.
std::string ranking_string(const DecisionProblem& problem, const RankingResult& result);

}  // namespace hfsim
