#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hfsim {

inline constexpr double kWeightSumTolerance = 1e-9;

/// Per-element weights: each in [0,1], summing to 1 within kWeightSumTolerance.
class WeightVector {
public:
  /// Throws WeightNotNormalized if any entry is outside [0,1] or the sum is off.
  explicit WeightVector(std::vector<double> weights);
  static WeightVector uniform(std::size_t m);

  std::span<const double> values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
  std::vector<double> weights_;
};

}  // namespace hfsim
