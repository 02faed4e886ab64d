#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfsim {

/// How the shorter of two hesitant elements is padded before comparison.
/// Pessimistic repeats the minimum grade, optimistic repeats the maximum.
enum class ExtensionPolicy { pessimistic, optimistic };

enum class Comparison { inferior, equal, superior, incomparable };

/// A hesitant fuzzy element: a non-empty multiset of membership grades in [0,1],
/// held in descending order.
///
/// Elements are paired by position after sorting. Whether the sort is ascending
/// or descending does not change the multiset of index-wise deviations between
/// two equal-length elements, so every measure is order-agnostic.
class HesitantElement {
public:
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double max() const noexcept { return values_.front(); }
  double min() const noexcept { return values_.back(); }

  friend bool operator==(const HesitantElement&, const HesitantElement&) = default;

private:
  explicit HesitantElement(std::vector<double> sorted) : values_(std::move(sorted)) {}
  friend HesitantElement make_element(std::span<const double>, bool);

  std::vector<double> values_;
};

/// Grades within 1e-12 of the unit interval are clamped into it.
inline constexpr double kGradeTolerance = 1e-12;

/// Validates, optionally collapses exact duplicates, and sorts descending.
/// Throws EmptyElement or OutOfRange.
HesitantElement make_element(std::span<const double> raw, bool dedupe = true);

inline HesitantElement make_element(std::initializer_list<double> raw, bool dedupe = true) {
  return make_element(std::span<const double>(raw.begin(), raw.size()), dedupe);
}

/// Pads the shorter element to the longer one's length. The longer element is
/// returned unchanged; equal-length inputs pass through.
std::pair<HesitantElement, HesitantElement> extend_pair(const HesitantElement& a,
                                                        const HesitantElement& b,
                                                        ExtensionPolicy policy);

/// Pads `e` to length `n` (n >= e.size()).
HesitantElement extend_to(const HesitantElement& e, std::size_t n, ExtensionPolicy policy);

Comparison compare_elements(const HesitantElement& a, const HesitantElement& b,
                            ExtensionPolicy policy);

/// A hesitant fuzzy set over a finite universe. Universe elements are opaque
/// string identifiers kept in insertion order; position i is the x_i index.
class HesitantSet {
public:
  using Entry = std::pair<std::string, HesitantElement>;

  /// Throws InvalidSpec on an empty universe or a repeated identifier.
  explicit HesitantSet(std::vector<Entry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const std::string& id(std::size_t i) const { return entries_[i].first; }
  const HesitantElement& element(std::size_t i) const { return entries_[i].second; }
  /// Position of `id`, or size() if absent.
  std::size_t index_of(std::string_view id) const;

  friend bool operator==(const HesitantSet&, const HesitantSet&) = default;

private:
  std::vector<Entry> entries_;
};

/// Element pairs of A and B, in A's universe order, each extended to its common
/// length. Throws UniverseMismatch when the identifier sets differ.
std::vector<std::pair<HesitantElement, HesitantElement>> aligned_pairs(const HesitantSet& a,
                                                                       const HesitantSet& b,
                                                                       ExtensionPolicy policy);

/// A ⊑ B: every element of A is inferior or equal to B's after extension.
bool is_quasi_subset(const HesitantSet& a, const HesitantSet& b, ExtensionPolicy policy);

/// Set equality in the extension-aware sense (every element compares equal).
bool sets_equal(const HesitantSet& a, const HesitantSet& b, ExtensionPolicy policy);

std::string_view to_string(ExtensionPolicy policy);
std::string_view to_string(Comparison c);
/// Accepts "pessimistic" / "optimistic"; throws InvalidSpec otherwise.
ExtensionPolicy parse_policy(std::string_view name);

}  // namespace hfsim
