#pragma once

// Numeric building blocks shared by the discrete and continuous measures.
// Every power mean factors out the largest deviation before raising to p so
// that large p neither overflows nor underflows to zero.

#include <span>
#include <utility>
#include <vector>

#include "hfsim/hesitant.hpp"

namespace hfsim::detail {

/// |a_j - b_j| for an extended (equal-length) pair.
std::vector<double> deviations(const HesitantElement& a, const HesitantElement& b);

/// (1/n Σ d^p)^{1/p}
double power_mean_root(std::span<const double> d, double p);

/// (Σ d^p)^{1/p}
double power_sum_root(std::span<const double> d, double p);

double max_of(std::span<const double> d);

/// [Σ_i w_i (1/n_i Σ_j d_ij^p)]^{1/p}
double outer_power_mean(const std::vector<std::vector<double>>& devs, std::span<const double> w,
                        double p);

/// Σ_j min(a_j,b_j) and Σ_j max(a_j,b_j) over an extended pair.
std::pair<double, double> min_max_sums(const HesitantElement& a, const HesitantElement& b);

/// Σ min / Σ max, with 0/0 taken as 1 (two all-zero elements are equal).
double set_ratio(const HesitantElement& a, const HesitantElement& b);

}  // namespace hfsim::detail
