#pragma once

#include <optional>
#include <string_view>

#include "hfsim/distance.hpp"
#include "hfsim/hesitant.hpp"
#include "hfsim/weights.hpp"

namespace hfsim {

/// Strictly decreasing maps used to turn a distance into a similarity.
enum class SimilarityTransform {
  linear,       ///< 1 - x
  exponential,  ///< e^{-x}
  reciprocal,   ///< 1 / (1 + x)
};

double apply(SimilarityTransform f, double x);

enum class SimilarityFamily {
  from_distance,    ///< s0 over any DistanceFamily
  geometric_outer,  ///< s1 / s4: 1 - [Σ w_i 1/n_i Σ_j Δ^p]^{1/p}
  geometric_inner,  ///< s2 / s5: 1 - Σ w_i (1/n_i Σ_j Δ^p)^{1/p}
  geometric_sum,    ///< s3 / s6: 1 - m/Σ n_i^{1/p} · Σ w_i (Σ_j Δ^p)^{1/p}
  set_theoretic,    ///< s11 / s12: Σ w_i Σ_j min / Σ_j max
};

enum class Weighting { uniform, weighted };

/// A similarity measure. With `weighting == weighted`, `weights` must be set
/// (the decision method fills it in from the attribute weights); otherwise
/// w_i = 1/m. For from_distance, `base` carries the distance and its own
/// weights, and `p`/`weighting` are unused.
struct SimilaritySpec {
  SimilarityFamily family = SimilarityFamily::geometric_outer;
  double p = 1.0;
  Weighting weighting = Weighting::uniform;
  std::optional<WeightVector> weights;
  DistanceSpec base{};
  SimilarityTransform transform = SimilarityTransform::linear;
};

/// Value plus a flag for results outside [0,1]. Only geometric_sum with skewed
/// weights can trip it; the value is reported unclamped.
struct SimilarityOutcome {
  double value;
  bool outside_unit_interval;
};

/// (f(d) - f(d_max)) / (f(0) - f(d_max)), d_max the family supremum.
double similarity_from_distance(const HesitantSet& a, const HesitantSet& b,
                                const DistanceSpec& base, SimilarityTransform transform,
                                ExtensionPolicy policy = ExtensionPolicy::pessimistic);

/// Σ w_i r_i with r_i = Σ_j min / Σ_j max over the extended pair (0/0 -> 1).
double set_theoretic_similarity(const HesitantSet& a, const HesitantSet& b,
                                const std::optional<WeightVector>& weights = std::nullopt,
                                ExtensionPolicy policy = ExtensionPolicy::pessimistic);

SimilarityOutcome evaluate_similarity(const HesitantSet& a, const HesitantSet& b,
                                      const SimilaritySpec& spec,
                                      ExtensionPolicy policy = ExtensionPolicy::pessimistic);

inline double similarity(const HesitantSet& a, const HesitantSet& b, const SimilaritySpec& spec,
                         ExtensionPolicy policy = ExtensionPolicy::pessimistic) {
  return evaluate_similarity(a, b, spec, policy).value;
}

std::string_view to_string(SimilarityTransform f);
std::string_view to_string(SimilarityFamily family);
SimilarityTransform parse_transform(std::string_view name);

}  // namespace hfsim
