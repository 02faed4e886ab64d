#include "hfsim/weights.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hfsim/error.hpp"

namespace hfsim {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw WeightNotNormalized("weight vector is empty");
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw WeightNotNormalized("weight " + std::to_string(w) + " outside [0,1]");
    }
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw WeightNotNormalized("weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

WeightVector WeightVector::uniform(std::size_t m) {
  return WeightVector(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

}  // namespace hfsim
