#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "hfsim/hesitant.hpp"
#include "hfsim/madm.hpp"
#include "hfsim/weights.hpp"

namespace hfsim {

/// Two sets on one universe, with optional per-element weights, as read from a
/// pair document: {"A": {id: [grades]}, "B": {...}, "weights": [...]}.
struct SetPair {
  HesitantSet a;
  HesitantSet b;
  std::optional<WeightVector> weights;
};

/// Decision problem document:
///   {"attributes": [names], "weights": [numbers],
///    "alternatives": {name: [[grades for attribute 1], [grades for attribute 2], ...]}}
/// Repeated grades within a cell are collapsed. Throws ParseError (syntax, wrong
/// types; message carries line/column or the field path) or ValidationError.
DecisionProblem parse_problem(std::string_view text);
SetPair parse_pair(std::string_view text);

using Document = std::variant<DecisionProblem, SetPair>;
/// Dispatches on the top-level keys ("alternatives" vs "A"/"B").
Document parse_document(std::string_view text);

/// Inverse of parse_problem; parse_problem(emit_problem(p)) == p.
std::string emit_problem(const DecisionProblem& problem);

/// Fixed-point text with `decimals` places (round-half-even on the binary value).
std::string format_fixed(double value, int decimals = 6);

std::string read_file(const std::string& path);

}  // namespace hfsim
