#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfsim/distance.hpp"
#include "hfsim/similarity.hpp"

namespace hfsim {

/// Distance by short code (d1..d11) or family name ("hamming", "lp-weighted",
/// "type2-euclidean", ...). d18 is not a family; see exponential_distance.
/// Throws InvalidSpec for unknown names.
DistanceSpec distance_measure(std::string_view name, double p);

/// Similarity by short code: s0 (needs `base`), s1..s6, s11, s12.
/// s4..s6 and s12 are the weighted forms.
SimilaritySpec similarity_measure(std::string_view name, double p,
                                  std::optional<std::string_view> base = std::nullopt,
                                  SimilarityTransform transform = SimilarityTransform::linear);

bool is_distance_name(std::string_view name);
bool is_similarity_name(std::string_view name);

/// Human label such as "s4 (geometric-outer, weighted)".
std::string describe(const SimilaritySpec& spec);

}  // namespace hfsim
