#include "hfsim/similarity.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hfsim/error.hpp"
#include "kernels.hpp"

namespace hfsim {

double apply(SimilarityTransform f, double x) {
  switch (f) {
    case SimilarityTransform::linear: return 1.0 - x;
    case SimilarityTransform::exponential: return std::exp(-x);
    case SimilarityTransform::reciprocal: return 1.0 / (1.0 + x);
  }
  throw InvalidSpec("unknown similarity transform");
}

double similarity_from_distance(const HesitantSet& a, const HesitantSet& b,
                                const DistanceSpec& base, SimilarityTransform transform,
                                ExtensionPolicy policy) {
  const double d = distance(a, b, base, policy);
  const auto lengths = common_lengths(a, b);
  const double f_max = apply(transform, max_distance(base, lengths));
  return (apply(transform, d) - f_max) / (apply(transform, 0.0) - f_max);
}

namespace {

std::vector<double> resolve_weights(Weighting weighting, const std::optional<WeightVector>& weights,
                                    std::size_t m) {
  if (weighting == Weighting::uniform) {
    if (weights) throw InvalidSpec("uniform similarity given explicit weights");
    return std::vector<double>(m, 1.0 / static_cast<double>(m));
  }
  if (!weights) throw InvalidSpec("weighted similarity needs weights");
  if (weights->size() != m) {
    throw InvalidSpec("weight vector has " + std::to_string(weights->size()) +
                      " entries for a universe of " + std::to_string(m));
  }
  return {weights->values().begin(), weights->values().end()};
}

void check_p(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw InvalidSpec("p must be a positive finite number, got " + std::to_string(p));
  }
}

}  // namespace

double set_theoretic_similarity(const HesitantSet& a, const HesitantSet& b,
                                const std::optional<WeightVector>& weights,
                                ExtensionPolicy policy) {
  const auto pairs = aligned_pairs(a, b, policy);
  const auto w =
      resolve_weights(weights ? Weighting::weighted : Weighting::uniform, weights, pairs.size());
  // Accumulate the shortfall so identical sets give exactly 1 whatever the
  // rounding in the weights.
  double shortfall = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    shortfall += w[i] * (1.0 - detail::set_ratio(pairs[i].first, pairs[i].second));
  }
  return 1.0 - shortfall;
}

SimilarityOutcome evaluate_similarity(const HesitantSet& a, const HesitantSet& b,
                                      const SimilaritySpec& spec, ExtensionPolicy policy) {
  double value = 0.0;
  switch (spec.family) {
    case SimilarityFamily::from_distance:
      value = similarity_from_distance(a, b, spec.base, spec.transform, policy);
      break;
    case SimilarityFamily::set_theoretic:
      if (spec.weighting == Weighting::weighted && !spec.weights) {
        throw InvalidSpec("weighted similarity needs weights");
      }
      if (spec.weighting == Weighting::uniform && spec.weights) {
        throw InvalidSpec("uniform similarity given explicit weights");
      }
      value = set_theoretic_similarity(a, b, spec.weights, policy);
      break;
    case SimilarityFamily::geometric_outer:
    case SimilarityFamily::geometric_inner:
    case SimilarityFamily::geometric_sum: {
      check_p(spec.p);
      const auto pairs = aligned_pairs(a, b, policy);
      const auto w = resolve_weights(spec.weighting, spec.weights, pairs.size());
      std::vector<std::vector<double>> devs;
      devs.reserve(pairs.size());
      for (const auto& [ea, eb] : pairs) devs.push_back(detail::deviations(ea, eb));

      if (spec.family == SimilarityFamily::geometric_outer) {
        value = 1.0 - detail::outer_power_mean(devs, w, spec.p);
      } else if (spec.family == SimilarityFamily::geometric_inner) {
        double s = 0.0;
        for (std::size_t i = 0; i < devs.size(); ++i) {
          s += w[i] * detail::power_mean_root(devs[i], spec.p);
        }
        value = 1.0 - s;
      } else {
        double s = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < devs.size(); ++i) {
          s += w[i] * detail::power_sum_root(devs[i], spec.p);
          norm += std::pow(static_cast<double>(devs[i].size()), 1.0 / spec.p);
        }
        value = 1.0 - static_cast<double>(devs.size()) / norm * s;
      }
      break;
    }
  }
  return {value, value < 0.0 || value > 1.0};
}

std::string_view to_string(SimilarityTransform f) {
  switch (f) {
    case SimilarityTransform::linear: return "linear";
    case SimilarityTransform::exponential: return "exponential";
    case SimilarityTransform::reciprocal: return "reciprocal";
  }
  return "?";
}

std::string_view to_string(SimilarityFamily family) {
  switch (family) {
    case SimilarityFamily::from_distance: return "from-distance";
    case SimilarityFamily::geometric_outer: return "geometric-outer";
    case SimilarityFamily::geometric_inner: return "geometric-inner";
    case SimilarityFamily::geometric_sum: return "geometric-sum";
    case SimilarityFamily::set_theoretic: return "set-theoretic";
  }
  return "?";
}

SimilarityTransform parse_transform(std::string_view name) {
  if (name == "linear") return SimilarityTransform::linear;
  if (name == "exponential") return SimilarityTransform::exponential;
  if (name == "reciprocal") return SimilarityTransform::reciprocal;
  throw InvalidSpec("unknown transform '" + std::string(name) + "'");
}

}  // namespace hfsim
