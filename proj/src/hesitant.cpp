#include "hfsim/hesitant.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hfsim/error.hpp"

namespace hfsim {

HesitantElement make_element(std::span<const double> raw, bool dedupe) {
  if (raw.empty()) throw EmptyElement();
  std::vector<double> values;
  values.reserve(raw.size());
  for (double v : raw) {
    if (!(v >= -kGradeTolerance && v <= 1.0 + kGradeTolerance)) throw OutOfRange(v);
    values.push_back(std::clamp(v, 0.0, 1.0));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  if (dedupe) values.erase(std::unique(values.begin(), values.end()), values.end());
  return HesitantElement(std::move(values));
}

HesitantElement extend_to(const HesitantElement& e, std::size_t n, ExtensionPolicy policy) {
  if (n <= e.size()) return e;
  std::vector<double> values(e.values().begin(), e.values().end());
  const double pad = policy == ExtensionPolicy::pessimistic ? e.min() : e.max();
  values.resize(n, pad);
  return make_element(values, false);
}

std::pair<HesitantElement, HesitantElement> extend_pair(const HesitantElement& a,
                                                        const HesitantElement& b,
                                                        ExtensionPolicy policy) {
  const std::size_t n = std::max(a.size(), b.size());
  return {extend_to(a, n, policy), extend_to(b, n, policy)};
}

Comparison compare_elements(const HesitantElement& a, const HesitantElement& b,
                            ExtensionPolicy policy) {
  const auto [ea, eb] = extend_pair(a, b, policy);
  bool all_le = true;
  bool all_ge = true;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    all_le = all_le && ea[i] <= eb[i];
    all_ge = all_ge && ea[i] >= eb[i];
  }
  if (all_le && all_ge) return Comparison::equal;
  if (all_le) return Comparison::inferior;
  if (all_ge) return Comparison::superior;
  return Comparison::incomparable;
}

HesitantSet::HesitantSet(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidSpec("hesitant set needs at least one universe element");
  std::set<std::string_view> seen;
  for (const auto& [id, _] : entries_) {
    if (!seen.insert(id).second) throw InvalidSpec("duplicate universe element '" + id + "'");
  }
}

std::size_t HesitantSet::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first == id) return i;
  }
  return entries_.size();
}

std::vector<std::pair<HesitantElement, HesitantElement>> aligned_pairs(const HesitantSet& a,
                                                                       const HesitantSet& b,
                                                                       ExtensionPolicy policy) {
  if (a.size() != b.size()) {
    throw UniverseMismatch("universe sizes differ (" + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()) + ")");
  }
  std::vector<std::pair<HesitantElement, HesitantElement>> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    // same order is the common case
    std::size_t j = b.id(i) == a.id(i) ? i : b.index_of(a.id(i));
    if (j == b.size()) throw UniverseMismatch("element '" + a.id(i) + "' missing from second set");
    out.push_back(extend_pair(a.element(i), b.element(j), policy));
  }
  return out;
}

bool is_quasi_subset(const HesitantSet& a, const HesitantSet& b, ExtensionPolicy policy) {
  for (const auto& [ea, eb] : aligned_pairs(a, b, policy)) {
    const auto c = compare_elements(ea, eb, policy);
    if (c != Comparison::inferior && c != Comparison::equal) return false;
  }
  return true;
}

bool sets_equal(const HesitantSet& a, const HesitantSet& b, ExtensionPolicy policy) {
  for (const auto& [ea, eb] : aligned_pairs(a, b, policy)) {
    if (ea != eb) return false;
  }
  return true;
}

std::string_view to_string(ExtensionPolicy policy) {
  return policy == ExtensionPolicy::pessimistic ? "pessimistic" : "optimistic";
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::inferior: return "inferior";
    case Comparison::equal: return "equal";
    case Comparison::superior: return "superior";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

ExtensionPolicy parse_policy(std::string_view name) {
  if (name == "pessimistic") return ExtensionPolicy::pessimistic;
  if (name == "optimistic") return ExtensionPolicy::optimistic;
  throw InvalidSpec("unknown extension policy '" + std::string(name) + "'");
}

}  // namespace hfsim
