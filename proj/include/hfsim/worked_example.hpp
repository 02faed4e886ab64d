#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hfsim/hesitant.hpp"
#include "hfsim/madm.hpp"

namespace hfsim {

/// Absolute tolerance for comparing reproduced scores with the published ones,
/// which are rounded to 4-5 digits.
inline constexpr double kReproductionTolerance = 2e-3;

/// One published result table: relative-similarity scores of H1..H5 for each p.
struct ReportedTable {
  std::string label;    ///< "Table 2"
  std::string measure;  ///< similarity code, e.g. "s4"
  bool uses_p;
  std::vector<double> p_values;
  std::vector<std::vector<double>> scores;  ///< one row per p
  std::vector<std::string> rankings;        ///< one per p
};

/// Tables 2-5 of the energy-policy example, as published.
const std::vector<ReportedTable>& reported_tables();

/// Raw JSON of the bundled five-alternative, four-attribute energy-policy matrix
/// (data/table1.json).
std::string_view example_problem_json();
DecisionProblem example_problem();

struct ReproducedRow {
  double p;
  std::vector<double> scores;
  std::string ranking;
  std::vector<double> reported_scores;
  std::string reported_ranking;
  double max_deviation;
  bool ranking_matches;
};

struct ReproducedTable {
  const ReportedTable* reported;
  std::vector<ReproducedRow> rows;

  double max_deviation() const;
  bool rankings_match() const;
  bool within_tolerance() const { return max_deviation() <= kReproductionTolerance; }
};

/// Recomputes every published table on `problem` and pairs each row with the
/// published values.
std::vector<ReproducedTable> reproduce_tables(const DecisionProblem& problem,
                                              ExtensionPolicy policy = ExtensionPolicy::pessimistic);

}  // namespace hfsim
