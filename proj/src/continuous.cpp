#include "hfsim/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "hfsim/error.hpp"
#include "kernels.hpp"

namespace hfsim {

namespace {

void check_grid(std::span<const double> nodes) {
  if (nodes.size() < 2) throw InvalidSpec("sample grid needs at least two nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i])) throw InvalidSpec("sample grid has a non-finite node");
    if (i > 0 && !(nodes[i] > nodes[i - 1])) {
      throw InvalidSpec("sample grid must be strictly increasing");
    }
  }
}

bool same_grid(std::span<const double> x, std::span<const double> y) {
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

SampledHesitantFunction::SampledHesitantFunction(std::vector<double> nodes,
                                                 std::vector<HesitantElement> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  check_grid(nodes_);
  if (values_.size() != nodes_.size()) {
    throw InvalidSpec("need one hesitant element per node (" + std::to_string(nodes_.size()) +
                      " nodes, " + std::to_string(values_.size()) + " elements)");
  }
}

SampledWeightFunction::SampledWeightFunction(std::vector<double> nodes, std::vector<double> density)
    : nodes_(std::move(nodes)), density_(std::move(density)) {
  check_grid(nodes_);
  if (density_.size() != nodes_.size()) throw InvalidSpec("need one weight per node");
  for (double w : density_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw WeightNotNormalized("weight density " + std::to_string(w) + " outside [0,1]");
    }
  }
  const double total = trapezoid(nodes_, density_);
  if (std::abs(total - 1.0) > kWeightIntegralTolerance) {
    throw WeightNotNormalized("weight density integrates to " + std::to_string(total));
  }
}

SampledWeightFunction SampledWeightFunction::uniform(std::vector<double> nodes) {
  check_grid(nodes);
  const double height = 1.0 / (nodes.back() - nodes.front());
  std::vector<double> density(nodes.size(), height);
  return SampledWeightFunction(std::move(nodes), std::move(density));
}

double trapezoid(std::span<const double> nodes, std::span<const double> values) {
  double s = 0.0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    s += 0.5 * (nodes[i] - nodes[i - 1]) * (values[i] + values[i - 1]);
  }
  return s;
}

namespace {

using Integrand = std::function<double(const HesitantElement&, const HesitantElement&)>;

/// ∫ w g (weighted) or 1/(b-a) ∫ g (normalized) over the shared grid.
double integrate(const SampledHesitantFunction& a, const SampledHesitantFunction& b,
                 const std::optional<SampledWeightFunction>& w, bool weighted,
                 ExtensionPolicy policy, const Integrand& g) {
  if (!same_grid(a.nodes(), b.nodes())) throw GridMismatch("A and B are sampled on different grids");
  if (weighted) {
    if (!w) throw InvalidSpec("weighted continuous measure needs a weight function");
    if (!same_grid(w->nodes(), a.nodes())) {
      throw GridMismatch("weight function is sampled on a different grid");
    }
  } else if (w) {
    throw InvalidSpec("normalized continuous measure takes no weight function");
  }

  const auto nodes = a.nodes();
  std::vector<double> values(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto [ea, eb] = extend_pair(a.values()[k], b.values()[k], policy);
    values[k] = g(ea, eb);
    if (weighted) values[k] *= w->density()[k];
  }
  const double integral = trapezoid(nodes, values);
  return weighted ? integral : integral / (a.upper() - a.lower());
}

void check_p(double p, bool at_least_one) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw InvalidSpec("p must be a positive finite number, got " + std::to_string(p));
  }
  if (at_least_one && p < 1.0) throw InvalidSpec("L_p variants require p >= 1");
}

Integrand power_mean_integrand(double p) {
  return [p](const HesitantElement& a, const HesitantElement& b) {
    return detail::power_mean_root(detail::deviations(a, b), p);
  };
}

Integrand power_sum_integrand(double p) {
  return [p](const HesitantElement& a, const HesitantElement& b) {
    return detail::power_sum_root(detail::deviations(a, b), p);
  };
}

}  // namespace

double continuous_distance(const SampledHesitantFunction& a, const SampledHesitantFunction& b,
                           const std::optional<SampledWeightFunction>& w, double p,
                           ContinuousDistanceVariant variant, ExtensionPolicy policy) {
  switch (variant) {
    case ContinuousDistanceVariant::type2_weighted:
      check_p(p, false);
      return integrate(a, b, w, true, policy, power_mean_integrand(p));
    case ContinuousDistanceVariant::type2_normalized:
      check_p(p, false);
      return integrate(a, b, w, false, policy, power_mean_integrand(p));
    case ContinuousDistanceVariant::lp_weighted:
      check_p(p, true);
      return integrate(a, b, w, true, policy, power_sum_integrand(p));
    case ContinuousDistanceVariant::lp_average:
      check_p(p, true);
      return integrate(a, b, w, false, policy, power_sum_integrand(p));
  }
  throw InvalidSpec("unknown continuous distance variant");
}

double continuous_similarity(const SampledHesitantFunction& a, const SampledHesitantFunction& b,
                             const std::optional<SampledWeightFunction>& w, double p,
                             ContinuousSimilarityVariant variant, ExtensionPolicy policy) {
  // The discrete m / Σ n_i^{1/p} prefactor is applied per node (m = 1 there).
  auto normalized_sum = [p](const HesitantElement& x, const HesitantElement& y) {
    return detail::power_sum_root(detail::deviations(x, y), p) /
           std::pow(static_cast<double>(x.size()), 1.0 / p);
  };
  auto ratio = [](const HesitantElement& x, const HesitantElement& y) {
    return detail::set_ratio(x, y);
  };

  switch (variant) {
    case ContinuousSimilarityVariant::geometric_weighted:
      check_p(p, false);
      return 1.0 - integrate(a, b, w, true, policy, power_mean_integrand(p));
    case ContinuousSimilarityVariant::geometric_normalized:
      check_p(p, false);
      return 1.0 - integrate(a, b, w, false, policy, power_mean_integrand(p));
    case ContinuousSimilarityVariant::geometric_sum_weighted:
      check_p(p, false);
      return 1.0 - integrate(a, b, w, true, policy, normalized_sum);
    case ContinuousSimilarityVariant::geometric_sum_normalized:
      check_p(p, false);
      return 1.0 - integrate(a, b, w, false, policy, normalized_sum);
    case ContinuousSimilarityVariant::set_theoretic_weighted:
      return integrate(a, b, w, true, policy, ratio);
    case ContinuousSimilarityVariant::set_theoretic_normalized:
      return integrate(a, b, w, false, policy, ratio);
  }
  throw InvalidSpec("unknown continuous similarity variant");
}

std::string_view to_string(ContinuousDistanceVariant v) {
  switch (v) {
    case ContinuousDistanceVariant::type2_weighted: return "type2-weighted";
    case ContinuousDistanceVariant::type2_normalized: return "type2-normalized";
    case ContinuousDistanceVariant::lp_weighted: return "lp-weighted";
    case ContinuousDistanceVariant::lp_average: return "lp-average";
  }
  return "?";
}

std::string_view to_string(ContinuousSimilarityVariant v) {
  switch (v) {
    case ContinuousSimilarityVariant::geometric_weighted: return "geometric-weighted";
    case ContinuousSimilarityVariant::geometric_sum_weighted: return "geometric-sum-weighted";
    case ContinuousSimilarityVariant::geometric_normalized: return "geometric-normalized";
    case ContinuousSimilarityVariant::geometric_sum_normalized: return "geometric-sum-normalized";
    case ContinuousSimilarityVariant::set_theoretic_weighted: return "set-theoretic-weighted";
    case ContinuousSimilarityVariant::set_theoretic_normalized: return "set-theoretic-normalized";
  }
  return "?";
}

}  // namespace hfsim
