#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hfsim/hesitant.hpp"
#include "hfsim/weights.hpp"

namespace hfsim {

/// The discrete distance families. Codes d1..d11 in comments.
///
/// Below, Δ_ij = |h_A(x_i)_j - h_B(x_i)_j| after extension, n_i the common
/// length at x_i and m the universe size.
enum class DistanceFamily {
  hamming,            ///< d1: 1/m Σ_i 1/n_i Σ_j Δ_ij
  euclidean,          ///< d2: generalized at p = 2
  generalized,        ///< d3: [1/m Σ_i 1/n_i Σ_j Δ^p]^{1/p}
  type2_generalized,  ///< d4: 1/m Σ_i (1/n_i Σ_j Δ^p)^{1/p}
  type2_euclidean,    ///< d4 at p = 2
  type2_sum,          ///< d5: Σ_i (1/n_i Σ_j Δ^p)^{1/p}
  inner_power_mean,   ///< d6: 1/m Σ_i (Σ_j Δ^p)^{1/p}
  inner_power_sum,    ///< d7: Σ_i (Σ_j Δ^p)^{1/p}
  lp,                 ///< d8: d6 restricted to p >= 1
  hamming_hausdorff,  ///< d9: 1/m Σ_i max_j Δ_ij
  type2_weighted,     ///< d10: Σ_i w_i (1/n_i Σ_j Δ^p)^{1/p}
  lp_weighted,        ///< d11: Σ_i w_i (Σ_j Δ^p)^{1/p}, p >= 1
};

struct DistanceSpec {
  DistanceFamily family = DistanceFamily::hamming;
  double p = 1.0;
  std::optional<WeightVector> weights;
};

bool is_weighted(DistanceFamily family);
/// Families whose p is fixed by definition (d1, d2, type-2 Euclidean, d9) ignore DistanceSpec::p.
bool uses_p(DistanceFamily family);

/// Throws InvalidSpec if p is out of range, or weights are missing, superfluous,
/// or not of length `universe_size`.
void validate(const DistanceSpec& spec, std::size_t universe_size);

double distance(const HesitantSet& a, const HesitantSet& b, const DistanceSpec& spec,
                ExtensionPolicy policy = ExtensionPolicy::pessimistic);

/// Theoretical supremum of the family given the per-element common lengths.
double max_distance(const DistanceSpec& spec, std::span<const std::size_t> lengths);

/// n_{x_i} = max(|h_A(x_i)|, |h_B(x_i)|), in A's universe order.
std::vector<std::size_t> common_lengths(const HesitantSet& a, const HesitantSet& b);

/// (1 - e^{-d}) / (1 - e^{-d_max}) with d_max the family supremum; lies in [0,1].
double exponential_distance(const HesitantSet& a, const HesitantSet& b, const DistanceSpec& base,
                            ExtensionPolicy policy = ExtensionPolicy::pessimistic);

std::string_view to_string(DistanceFamily family);

}  // namespace hfsim
