#include "hfsim/worked_example.hpp"

#include <algorithm>
#include <cmath>

#include "example_data.hpp"
#include "hfsim/io.hpp"
#include "hfsim/measures.hpp"

namespace hfsim {

const std::vector<ReportedTable>& reported_tables() {
  static const std::vector<ReportedTable> tables{
      {"Table 2",
       "s4",
       true,
       {1, 2, 6, 10},
       {{0.4719, 0.47033, 0.5111, 0.47788, 0.5547},
        {0.46814, 0.48052, 0.5138, 0.46197, 0.55475},
        {0.47238, 0.48158, 0.52557, 0.4262, 0.55783},
        {0.47854, 0.47206, 0.53101, 0.40649, 0.56777}},
       {"H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2", "H5 ≻ H3 ≻ H2 ≻ H1 ≻ H4", "H5 ≻ H3 ≻ H2 ≻ H1 ≻ H4",
        "H5 ≻ H3 ≻ H1 ≻ H2 ≻ H4"}},
      {"Table 3",
       "s5",
       true,
       {1, 2, 6, 10},
       {{0.4719, 0.47033, 0.5111, 0.47788, 0.5547},
        {0.47016, 0.46967, 0.50993, 0.48055, 0.55334},
        {0.47058, 0.45747, 0.51003, 0.48376, 0.54219},
        {0.47124, 0.4518, 0.51049, 0.48481, 0.5389}},
       {"H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2", "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2", "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2",
        "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2"}},
      {"Table 4",
       "s6",
       true,
       {1, 2, 6, 10},
       {{0.4728, 0.4735, 0.51883, 0.4735, 0.54951},
        {0.46962, 0.48329, 0.51937, 0.45865, 0.55016},
        {0.4976, 0.49856, 0.50208, 0.4905, 0.50783},
        {0.49985, 0.49978, 0.50015, 0.49819, 0.50167}},
       {"H5 ≻ H3 ≻ H2 ≻ H4 ≻ H1", "H5 ≻ H3 ≻ H2 ≻ H1 ≻ H4", "H5 ≻ H3 ≻ H2 ≻ H1 ≻ H4",
        "H5 ≻ H3 ≻ H1 ≻ H2 ≻ H4"}},
      {"Table 5",
       "s11",
       false,
       {1},
       {{0.49857, 0.49975, 0.57059, 0.49975, 0.6122}},
       {"H5 ≻ H3 ≻ H2 ≻ H4 ≻ H1"}},
  };
  return tables;
}

std::string_view example_problem_json() { return detail::kExampleProblemJson; }

DecisionProblem example_problem() { return parse_problem(example_problem_json()); }

double ReproducedTable::max_deviation() const {
  double m = 0.0;
  for (const auto& row : rows) m = std::max(m, row.max_deviation);
  return m;
}

bool ReproducedTable::rankings_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ranking_matches; });
}

std::vector<ReproducedTable> reproduce_tables(const DecisionProblem& problem,
                                              ExtensionPolicy policy) {
  std::vector<ReproducedTable> out;
  for (const auto& table : reported_tables()) {
    ReproducedTable rt{&table, {}};
    for (std::size_t r = 0; r < table.p_values.size(); ++r) {
      const double p = table.p_values[r];
      const auto result = relative_similarity(problem, similarity_measure(table.measure, p), policy);
      ReproducedRow row{p,
                        result.scores,
                        ranking_string(problem, result),
                        table.scores[r],
                        table.rankings[r],
                        0.0,
                        false};
      for (std::size_t i = 0; i < row.scores.size() && i < row.reported_scores.size(); ++i) {
        row.max_deviation = std::max(row.max_deviation, std::abs(row.scores[i] - row.reported_scores[i]));
      }
      if (row.scores.size() != row.reported_scores.size()) row.max_deviation = INFINITY;
      row.ranking_matches = row.ranking == row.reported_ranking;
      rt.rows.push_back(std::move(row));
    }
    out.push_back(std::move(rt));
  }
  return out;
}

}  // namespace hfsim
