#include "hfsim/distance.hpp"

#include <cmath>
#include <string>

#include "hfsim/error.hpp"
#include "kernels.hpp"

namespace hfsim {

bool is_weighted(DistanceFamily family) {
  return family == DistanceFamily::type2_weighted || family == DistanceFamily::lp_weighted;
}

bool uses_p(DistanceFamily family) {
  switch (family) {
    case DistanceFamily::hamming:
    case DistanceFamily::euclidean:
    case DistanceFamily::type2_euclidean:
    case DistanceFamily::hamming_hausdorff:
      return false;
    default:
      return true;
  }
}

namespace {

bool requires_p_at_least_one(DistanceFamily family) {
  return family == DistanceFamily::lp || family == DistanceFamily::lp_weighted;
}

double effective_p(const DistanceSpec& spec) {
  switch (spec.family) {
    case DistanceFamily::hamming:
    case DistanceFamily::hamming_hausdorff:
      return 1.0;
    case DistanceFamily::euclidean:
    case DistanceFamily::type2_euclidean:
      return 2.0;
    default:
      return spec.p;
  }
}

}  // namespace

void validate(const DistanceSpec& spec, std::size_t universe_size) {
  if (uses_p(spec.family)) {
    if (!(spec.p > 0.0) || !std::isfinite(spec.p)) {
      throw InvalidSpec("p must be a positive finite number, got " + std::to_string(spec.p));
    }
    if (requires_p_at_least_one(spec.family) && spec.p < 1.0) {
      throw InvalidSpec(std::string(to_string(spec.family)) + " requires p >= 1");
    }
  }
  if (is_weighted(spec.family)) {
    if (!spec.weights) throw InvalidSpec(std::string(to_string(spec.family)) + " needs weights");
    if (spec.weights->size() != universe_size) {
      throw InvalidSpec("weight vector has " + std::to_string(spec.weights->size()) +
                        " entries for a universe of " + std::to_string(universe_size));
    }
  } else if (spec.weights) {
    throw InvalidSpec(std::string(to_string(spec.family)) + " takes no weights");
  }
}

double distance(const HesitantSet& a, const HesitantSet& b, const DistanceSpec& spec,
                ExtensionPolicy policy) {
  const auto pairs = aligned_pairs(a, b, policy);
  validate(spec, pairs.size());
  const double p = effective_p(spec);
  const auto m = static_cast<double>(pairs.size());

  std::vector<std::vector<double>> devs;
  devs.reserve(pairs.size());
  for (const auto& [ea, eb] : pairs) devs.push_back(detail::deviations(ea, eb));

  switch (spec.family) {
    case DistanceFamily::hamming: {
      double s = 0.0;
      for (const auto& d : devs) s += detail::power_mean_root(d, 1.0);
      return s / m;
    }
    case DistanceFamily::euclidean:
    case DistanceFamily::generalized: {
      const std::vector<double> w(devs.size(), 1.0 / m);
      return detail::outer_power_mean(devs, w, p);
    }
    case DistanceFamily::type2_generalized:
    case DistanceFamily::type2_euclidean:
    case DistanceFamily::type2_weighted: {
      const auto w = spec.family == DistanceFamily::type2_weighted
                         ? std::vector<double>(spec.weights->values().begin(),
                                               spec.weights->values().end())
                         : std::vector<double>(devs.size(), 1.0 / m);
      double s = 0.0;
      for (std::size_t i = 0; i < devs.size(); ++i) s += w[i] * detail::power_mean_root(devs[i], p);
      return s;
    }
    case DistanceFamily::type2_sum: {
      double s = 0.0;
      for (const auto& d : devs) s += detail::power_mean_root(d, p);
      return s;
    }
    case DistanceFamily::inner_power_mean:
    case DistanceFamily::lp:
    case DistanceFamily::inner_power_sum:
    case DistanceFamily::lp_weighted: {
      double s = 0.0;
      for (std::size_t i = 0; i < devs.size(); ++i) {
        const double term = detail::power_sum_root(devs[i], p);
        s += spec.family == DistanceFamily::lp_weighted ? (*spec.weights)[i] * term : term;
      }
      if (spec.family == DistanceFamily::inner_power_mean || spec.family == DistanceFamily::lp) {
        return s / m;
      }
      return s;
    }
    case DistanceFamily::hamming_hausdorff: {
      double s = 0.0;
      for (const auto& d : devs) s += detail::max_of(d);
      return s / m;
    }
  }
  throw InvalidSpec("unknown distance family");
}

double max_distance(const DistanceSpec& spec, std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw InvalidSpec("max_distance needs at least one element length");
  for (auto n : lengths) {
    if (n == 0) throw InvalidSpec("element lengths must be >= 1");
  }
  validate(spec, lengths.size());
  const double p = effective_p(spec);
  const auto m = static_cast<double>(lengths.size());
  auto root_n = [p](std::size_t n) { return std::pow(static_cast<double>(n), 1.0 / p); };

  switch (spec.family) {
    case DistanceFamily::type2_sum:
      return m;
    case DistanceFamily::inner_power_mean:
    case DistanceFamily::lp:
    case DistanceFamily::inner_power_sum: {
      double s = 0.0;
      for (auto n : lengths) s += root_n(n);
      return spec.family == DistanceFamily::inner_power_sum ? s : s / m;
    }
    case DistanceFamily::lp_weighted: {
      double s = 0.0;
      for (std::size_t i = 0; i < lengths.size(); ++i) s += (*spec.weights)[i] * root_n(lengths[i]);
      return s;
    }
    default:
      return 1.0;
  }
}

std::vector<std::size_t> common_lengths(const HesitantSet& a, const HesitantSet& b) {
  std::vector<std::size_t> out;
  for (const auto& [ea, _] : aligned_pairs(a, b, ExtensionPolicy::pessimistic)) {
    out.push_back(ea.size());
  }
  return out;
}

double exponential_distance(const HesitantSet& a, const HesitantSet& b, const DistanceSpec& base,
                            ExtensionPolicy policy) {
  const double d = distance(a, b, base, policy);
  const auto lengths = common_lengths(a, b);
  const double d_max = max_distance(base, lengths);
  if (d >= d_max) return 1.0;
  return std::expm1(-d) / std::expm1(-d_max);
}

std::string_view to_string(DistanceFamily family) {
  switch (family) {
    case DistanceFamily::hamming: return "hamming";
    case DistanceFamily::euclidean: return "euclidean";
    case DistanceFamily::generalized: return "generalized";
    case DistanceFamily::type2_generalized: return "type2-generalized";
    case DistanceFamily::type2_euclidean: return "type2-euclidean";
    case DistanceFamily::type2_sum: return "type2-sum";
    case DistanceFamily::inner_power_mean: return "inner-power-mean";
    case DistanceFamily::inner_power_sum: return "inner-power-sum";
    case DistanceFamily::lp: return "lp";
    case DistanceFamily::hamming_hausdorff: return "hamming-hausdorff";
    case DistanceFamily::type2_weighted: return "type2-weighted";
    case DistanceFamily::lp_weighted: return "lp-weighted";
  }
  return "?";
}

}  // namespace hfsim
