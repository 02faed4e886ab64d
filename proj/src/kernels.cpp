#include "kernels.hpp"

#include <algorithm>
#include <cmath>

namespace hfsim::detail {

std::vector<double> deviations(const HesitantElement& a, const HesitantElement& b) {
  std::vector<double> d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) d[j] = std::abs(a[j] - b[j]);
  return d;
}

double max_of(std::span<const double> d) {
  double m = 0.0;
  for (double v : d) m = std::max(m, v);
  return m;
}

namespace {

// Σ (d/scale)^p; scale > 0.
double scaled_power_sum(std::span<const double> d, double p, double scale) {
  double s = 0.0;
  for (double v : d) s += std::pow(v / scale, p);
  return s;
}

}  // namespace

double power_mean_root(std::span<const double> d, double p) {
  const double n = static_cast<double>(d.size());
  if (p == 1.0) {
    double s = 0.0;
    for (double v : d) s += v;
    return s / n;
  }
  const double scale = max_of(d);
  if (scale == 0.0) return 0.0;
  return scale * std::pow(scaled_power_sum(d, p, scale) / n, 1.0 / p);
}

double power_sum_root(std::span<const double> d, double p) {
  if (p == 1.0) {
    double s = 0.0;
    for (double v : d) s += v;
    return s;
  }
  const double scale = max_of(d);
  if (scale == 0.0) return 0.0;
  return scale * std::pow(scaled_power_sum(d, p, scale), 1.0 / p);
}

double outer_power_mean(const std::vector<std::vector<double>>& devs, std::span<const double> w,
                        double p) {
  if (p == 1.0) {
    // Same arithmetic as Σ w_i power_mean_root(d_i, 1), so the outer and inner
    // forms agree bit for bit at p = 1.
    double total = 0.0;
    for (std::size_t i = 0; i < devs.size(); ++i) total += w[i] * power_mean_root(devs[i], 1.0);
    return total;
  }
  double scale = 0.0;
  for (const auto& d : devs) scale = std::max(scale, max_of(d));
  if (scale == 0.0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < devs.size(); ++i) {
    total += w[i] * scaled_power_sum(devs[i], p, scale) / static_cast<double>(devs[i].size());
  }
  return scale * std::pow(total, 1.0 / p);
}

std::pair<double, double> min_max_sums(const HesitantElement& a, const HesitantElement& b) {
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    lo += std::min(a[j], b[j]);
    hi += std::max(a[j], b[j]);
  }
  return {lo, hi};
}

double set_ratio(const HesitantElement& a, const HesitantElement& b) {
  const auto [lo, hi] = min_max_sums(a, b);
  return hi == 0.0 ? 1.0 : lo / hi;
}

}  // namespace hfsim::detail
