#include "hfsim/measures.hpp"

#include <array>
#include <utility>

#include "hfsim/error.hpp"

namespace hfsim {

namespace {

struct DistanceName {
  std::string_view code;
  DistanceFamily family;
};

constexpr std::array kDistanceNames{
    DistanceName{"d1", DistanceFamily::hamming},
    DistanceName{"d2", DistanceFamily::euclidean},
    DistanceName{"d3", DistanceFamily::generalized},
    DistanceName{"d4", DistanceFamily::type2_generalized},
    DistanceName{"d5", DistanceFamily::type2_sum},
    DistanceName{"d6", DistanceFamily::inner_power_mean},
    DistanceName{"d7", DistanceFamily::inner_power_sum},
    DistanceName{"d8", DistanceFamily::lp},
    DistanceName{"d9", DistanceFamily::hamming_hausdorff},
    DistanceName{"d10", DistanceFamily::type2_weighted},
    DistanceName{"d11", DistanceFamily::lp_weighted},
    DistanceName{"type2-euclidean", DistanceFamily::type2_euclidean},
};

struct SimilarityName {
  std::string_view code;
  SimilarityFamily family;
  Weighting weighting;
};

constexpr std::array kSimilarityNames{
    SimilarityName{"s1", SimilarityFamily::geometric_outer, Weighting::uniform},
    SimilarityName{"s2", SimilarityFamily::geometric_inner, Weighting::uniform},
    SimilarityName{"s3", SimilarityFamily::geometric_sum, Weighting::uniform},
    SimilarityName{"s4", SimilarityFamily::geometric_outer, Weighting::weighted},
    SimilarityName{"s5", SimilarityFamily::geometric_inner, Weighting::weighted},
    SimilarityName{"s6", SimilarityFamily::geometric_sum, Weighting::weighted},
    SimilarityName{"s11", SimilarityFamily::set_theoretic, Weighting::uniform},
    SimilarityName{"s12", SimilarityFamily::set_theoretic, Weighting::weighted},
};

std::optional<DistanceFamily> lookup_distance(std::string_view name) {
  for (const auto& d : kDistanceNames) {
    if (d.code == name || to_string(d.family) == name) return d.family;
  }
  return std::nullopt;
}

}  // namespace

bool is_distance_name(std::string_view name) { return lookup_distance(name).has_value(); }

bool is_similarity_name(std::string_view name) {
  if (name == "s0") return true;
  for (const auto& s : kSimilarityNames) {
    if (s.code == name) return true;
  }
  return false;
}

DistanceSpec distance_measure(std::string_view name, double p) {
  const auto family = lookup_distance(name);
  if (!family) throw InvalidSpec("unknown distance measure '" + std::string(name) + "'");
  return DistanceSpec{*family, p, std::nullopt};
}

SimilaritySpec similarity_measure(std::string_view name, double p,
                                  std::optional<std::string_view> base,
                                  SimilarityTransform transform) {
  if (name == "s0") {
    if (!base) throw InvalidSpec("s0 needs a base distance");
    SimilaritySpec spec;
    spec.family = SimilarityFamily::from_distance;
    spec.base = distance_measure(*base, p);
    spec.transform = transform;
    spec.p = p;
    return spec;
  }
  for (const auto& s : kSimilarityNames) {
    if (s.code == name) {
      SimilaritySpec spec;
      spec.family = s.family;
      spec.weighting = s.weighting;
      spec.p = p;
      return spec;
    }
  }
  throw InvalidSpec("unknown similarity measure '" + std::string(name) + "'");
}

std::string describe(const SimilaritySpec& spec) {
  if (spec.family == SimilarityFamily::from_distance) {
    return "s0 (" + std::string(to_string(spec.transform)) + " over " +
           std::string(to_string(spec.base.family)) + ")";
  }
  for (const auto& s : kSimilarityNames) {
    if (s.family == spec.family && s.weighting == spec.weighting) {
      return std::string(s.code) + " (" + std::string(to_string(s.family)) +
             (s.weighting == Weighting::weighted ? ", weighted)" : ")");
    }
  }
  return std::string(to_string(spec.family));
}

}  // namespace hfsim
