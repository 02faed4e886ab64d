#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hfsim/hesitant.hpp"

namespace hfsim {

/// A hesitant membership function on [a,b], sampled on a strictly increasing
/// grid whose first and last nodes are a and b.
class SampledHesitantFunction {
public:
  /// Throws InvalidSpec unless there are >= 2 strictly increasing nodes and one
  /// element per node.
  SampledHesitantFunction(std::vector<double> nodes, std::vector<HesitantElement> values);

  double lower() const noexcept { return nodes_.front(); }
  double upper() const noexcept { return nodes_.back(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  const std::vector<HesitantElement>& values() const noexcept { return values_; }

private:
  std::vector<double> nodes_;
  std::vector<HesitantElement> values_;
};

/// Weight density on the same grid: w(x) in [0,1], trapezoidal integral 1 within 1e-6.
class SampledWeightFunction {
public:
  /// Throws InvalidSpec on a malformed grid, WeightNotNormalized on bad densities.
  SampledWeightFunction(std::vector<double> nodes, std::vector<double> density);

  /// w(x) = 1/(b-a) on the given grid.
  static SampledWeightFunction uniform(std::vector<double> nodes);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> density() const noexcept { return density_; }

private:
  std::vector<double> nodes_;
  std::vector<double> density_;
};

inline constexpr double kWeightIntegralTolerance = 1e-6;

/// Composite trapezoid rule over a non-uniform grid.
double trapezoid(std::span<const double> nodes, std::span<const double> values);

enum class ContinuousDistanceVariant {
  type2_weighted,    ///< d13 (d12 at p = 2): ∫ w (1/n_x Σ_j Δ^p)^{1/p}
  type2_normalized,  ///< d15 (d14 at p = 2): 1/(b-a) ∫ (1/n_x Σ_j Δ^p)^{1/p}
  lp_weighted,       ///< d16: ∫ w (Σ_j Δ^p)^{1/p}, p >= 1
  lp_average,        ///< d17: 1/(b-a) ∫ (Σ_j Δ^p)^{1/p}, p >= 1
};

enum class ContinuousSimilarityVariant {
  geometric_weighted,        ///< s7:  1 - ∫ w (1/n_x Σ_j Δ^p)^{1/p}
  geometric_sum_weighted,    ///< s8:  1 - ∫ w n_x^{-1/p} (Σ_j Δ^p)^{1/p}
  geometric_normalized,      ///< s9:  s7 with w = 1/(b-a)
  geometric_sum_normalized,  ///< s10: s8 with w = 1/(b-a)
  set_theoretic_weighted,    ///< s13: ∫ w Σ min / Σ max
  set_theoretic_normalized,  ///< s14: s13 with w = 1/(b-a)
};

/// Weighted variants require `w`; normalized variants reject it. Throws
/// GridMismatch when A, B and w are not sampled on the identical grid.
double continuous_distance(const SampledHesitantFunction& a, const SampledHesitantFunction& b,
                           const std::optional<SampledWeightFunction>& w, double p,
                           ContinuousDistanceVariant variant,
                           ExtensionPolicy policy = ExtensionPolicy::pessimistic);

double continuous_similarity(const SampledHesitantFunction& a, const SampledHesitantFunction& b,
                             const std::optional<SampledWeightFunction>& w, double p,
                             ContinuousSimilarityVariant variant,
                             ExtensionPolicy policy = ExtensionPolicy::pessimistic);

std::string_view to_string(ContinuousDistanceVariant v);
std::string_view to_string(ContinuousSimilarityVariant v);

}  // namespace hfsim
