#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "generators.hpp"
#include "hfsim/error.hpp"
#include "hfsim/io.hpp"
#include "hfsim/madm.hpp"
#include "hfsim/measures.hpp"
#include "hfsim/worked_example.hpp"

namespace hfsim {
namespace {

using testing::Generator;

std::vector<double> values(const HesitantElement& e) { return {e.values().begin(), e.values().end()}; }

TEST(IdealSets, EnergyMatrixFirstAttribute) {
  const auto ideals = ideal_alternatives(example_problem());
  EXPECT_EQ(values(ideals.positive.element(0)), (std::vector<double>{0.9, 0.7, 0.6, 0.6, 0.6}));
  EXPECT_EQ(values(ideals.negative.element(0)), (std::vector<double>{0.5, 0.3, 0.3, 0.3, 0.1}));
}

TEST(IdealSets, SingleSetIsItsOwnIdeal) {
  const std::vector<HesitantSet> one{testing::single("x", {0.6, 0.2})};
  const auto ideals = ideal_sets(one, ExtensionPolicy::pessimistic);
  EXPECT_TRUE(sets_equal(ideals.positive, one[0], ExtensionPolicy::pessimistic));
  EXPECT_TRUE(sets_equal(ideals.negative, one[0], ExtensionPolicy::pessimistic));
  EXPECT_THROW(ideal_sets(std::span<const HesitantSet>{}, ExtensionPolicy::pessimistic),
               InvalidProblem);
}

TEST(IdealSets, BracketEveryAlternative) {
  Generator gen(51);
  for (int t = 0; t < 200; ++t) {
    const auto ids = gen.universe(gen.uniform_int(1, 5));
    std::vector<HesitantSet> sets;
    for (int k = gen.uniform_int(1, 6); k > 0; --k) sets.push_back(gen.set(ids));
    for (auto policy : {ExtensionPolicy::pessimistic, ExtensionPolicy::optimistic}) {
      const auto ideals = ideal_sets(sets, policy);
      for (const auto& s : sets) {
        EXPECT_TRUE(is_quasi_subset(ideals.negative, s, policy));
        EXPECT_TRUE(is_quasi_subset(s, ideals.positive, policy));
      }
    }
  }
}

TEST(RelativeSimilarity, WeightedOuterAtPOne) {
  // Scores from an independent transcription in Python over the bundled matrix.
  const auto r = relative_similarity(example_problem(), similarity_measure("s4", 1));
  const std::vector<double> expected{0.471903037934834, 0.47032897843538485, 0.511097119471116,
                                     0.4778844640327405, 0.5546985676058556};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(r.scores[i], expected[i], 1e-12);
  EXPECT_EQ(ranking_string(example_problem(), r), "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2");
}

TEST(RelativeSimilarity, PrintedMatrixShiftsOnlyH5) {
  const auto printed = parse_problem(read_file(HFSIM_DATA_DIR "/table1_printed.json"));
  const auto r = relative_similarity(printed, similarity_measure("s4", 1));
  const auto base = relative_similarity(example_problem(), similarity_measure("s4", 1));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.scores[i], base.scores[i]);
  EXPECT_NEAR(r.scores[4], 0.5660317960018889, 1e-12);
}

TEST(RelativeSimilarity, OuterAndInnerAgreeAtPOne) {
  const auto problem = example_problem();
  EXPECT_EQ(relative_similarity(problem, similarity_measure("s4", 1)).scores,
            relative_similarity(problem, similarity_measure("s5", 1)).scores);
}

TEST(RelativeSimilarity, DuplicatingAnAlternativeLeavesScoresUnchanged) {
  const auto problem = example_problem();
  auto alts = problem.alternatives();
  alts.push_back({"H3 copy", alts[2].evaluations});
  const DecisionProblem bigger(problem.attributes(), alts, problem.weights());
  for (const char* code : {"s1", "s4", "s6", "s12"}) {
    const auto a = relative_similarity(problem, similarity_measure(code, 2));
    const auto b = relative_similarity(bigger, similarity_measure(code, 2));
    for (std::size_t i = 0; i < a.scores.size(); ++i) EXPECT_EQ(a.scores[i], b.scores[i]) << code;
    EXPECT_EQ(b.scores[5], b.scores[2]);
  }
}

TEST(RelativeSimilarity, TiesKeepInputOrder) {
  const HesitantSet same = testing::single("x", {0.4});
  const DecisionProblem problem(
      {"x"},
      {{"A", testing::single("x", {0.2})}, {"B", same}, {"C", same}, {"D", testing::single("x", {0.9})}},
      WeightVector({1.0}));
  const auto r = relative_similarity(problem, similarity_measure("s1", 1));
  EXPECT_EQ(r.order, (std::vector<std::size_t>{3, 1, 2, 0}));
}

TEST(RelativeSimilarity, DegenerateWhenSimilaritiesCancel) {
  // All weight on a four-long attribute; the other two have length one, so the
  // geometric-sum prefactor is 3/(1+1+4) = 1/2. A matches H+ there (s = 1) and
  // sits at full deviation from H- (s = 1 - 4/2 = -1).
  auto set = [](double v, double y) {
    return HesitantSet({{"x1", make_element({v})},
                        {"x2", make_element({v})},
                        {"y", make_element({y, y, y, y}, false)}});
  };
  const DecisionProblem problem({"x1", "x2", "y"}, {{"A", set(0, 1)}, {"B", set(1, 0)}},
                                WeightVector({0, 0, 1}));
  EXPECT_THROW(relative_similarity(problem, similarity_measure("s6", 1)), DegenerateScores);
  EXPECT_NO_THROW(relative_similarity(problem, similarity_measure("s4", 1)));
}

TEST(DecisionProblem, Invariants) {
  const auto a = testing::single("x", {0.2});
  const WeightVector w({1.0});
  EXPECT_THROW(DecisionProblem({"x"}, {{"A", a}}, w), InvalidProblem);
  EXPECT_THROW(DecisionProblem({"x"}, {{"A", a}, {"A", a}}, w), InvalidProblem);
  EXPECT_THROW(DecisionProblem({"x"}, {{"A", a}, {"B", testing::single("y", {0.2})}}, w),
               InvalidProblem);
  EXPECT_THROW(DecisionProblem({"x"}, {{"A", a}, {"B", a}}, WeightVector({0.5, 0.5})),
               InvalidProblem);
}

}  // namespace
}  // namespace hfsim
