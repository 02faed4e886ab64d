#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "generators.hpp"
#include "hfsim/continuous.hpp"
#include "hfsim/error.hpp"
#include "hfsim/measures.hpp"

namespace hfsim {
namespace {

using testing::Generator;
using testing::single;
using DV = ContinuousDistanceVariant;
using SV = ContinuousSimilarityVariant;

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = lo + (hi - lo) * i / (n - 1);
  x.back() = hi;
  return x;
}

SampledHesitantFunction constant(const std::vector<double>& nodes, const HesitantElement& e) {
  return {nodes, std::vector<HesitantElement>(nodes.size(), e)};
}

template <class F>
SampledHesitantFunction sampled(const std::vector<double>& nodes, F f) {
  std::vector<HesitantElement> v;
  for (double x : nodes) v.push_back(f(x));
  return {nodes, v};
}

TEST(Trapezoid, Basics) {
  const std::vector<double> x{0, 0.5, 2};
  const std::vector<double> y{1, 1, 1};
  EXPECT_DOUBLE_EQ(trapezoid(x, y), 2.0);
  const std::vector<double> lin{0, 0.5, 2};
  EXPECT_DOUBLE_EQ(trapezoid(x, lin), 2.0);
}

TEST(Continuous, LpAverageOfOppositeConstants) {
  const auto nodes = grid(0, 1, 11);
  const auto ones = constant(nodes, make_element({1.0}));
  const auto zeros = constant(nodes, make_element({0.0}));
  EXPECT_NEAR(continuous_distance(ones, zeros, std::nullopt, 1, DV::lp_average), 1.0, 1e-15);
  EXPECT_NEAR(continuous_distance(ones, zeros, std::nullopt, 2, DV::type2_normalized), 1.0, 1e-15);
}

TEST(Continuous, ConstantFunctionsReduceToDiscreteMeasures) {
  Generator gen(41);
  const auto nodes = grid(-1, 3, 9);
  for (int t = 0; t < 100; ++t) {
    const auto ea = gen.element();
    const auto eb = gen.element();
    const auto a = constant(nodes, ea), b = constant(nodes, eb);
    const HesitantSet sa({{"x", ea}}), sb({{"x", eb}});
    const double p = gen.uniform(1.0, 5.0);

    EXPECT_NEAR(continuous_distance(a, b, std::nullopt, p, DV::type2_normalized),
                distance(sa, sb, distance_measure("d4", p)), 1e-12);
    EXPECT_NEAR(continuous_distance(a, b, std::nullopt, p, DV::lp_average),
                distance(sa, sb, distance_measure("d8", p)), 1e-12);
    EXPECT_NEAR(continuous_similarity(a, b, std::nullopt, p, SV::geometric_normalized),
                similarity(sa, sb, similarity_measure("s2", p)), 1e-12);
    EXPECT_NEAR(continuous_similarity(a, b, std::nullopt, p, SV::geometric_sum_normalized),
                similarity(sa, sb, similarity_measure("s3", p)), 1e-12);
    EXPECT_NEAR(continuous_similarity(a, b, std::nullopt, p, SV::set_theoretic_normalized),
                similarity(sa, sb, similarity_measure("s11", p)), 1e-12);
  }
}

TEST(Continuous, UniformWeightMatchesNormalizedVariant) {
  Generator gen(42);
  const auto nodes = grid(0, 2, 17);
  auto random_fn = [&] { return sampled(nodes, [&](double) { return gen.element(); }); };
  const auto w = SampledWeightFunction::uniform(nodes);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_fn(), b = random_fn();
    const double p = gen.uniform(1.0, 4.0);
    EXPECT_NEAR(continuous_distance(a, b, w, p, DV::type2_weighted),
                continuous_distance(a, b, std::nullopt, p, DV::type2_normalized), 1e-12);
    EXPECT_NEAR(continuous_distance(a, b, w, p, DV::lp_weighted),
                continuous_distance(a, b, std::nullopt, p, DV::lp_average), 1e-12);
    EXPECT_NEAR(continuous_similarity(a, b, w, p, SV::geometric_weighted),
                continuous_similarity(a, b, std::nullopt, p, SV::geometric_normalized), 1e-12);
    EXPECT_NEAR(continuous_similarity(a, b, w, p, SV::geometric_sum_weighted),
                continuous_similarity(a, b, std::nullopt, p, SV::geometric_sum_normalized), 1e-12);
    EXPECT_NEAR(continuous_similarity(a, b, w, p, SV::set_theoretic_weighted),
                continuous_similarity(a, b, std::nullopt, p, SV::set_theoretic_normalized), 1e-12);
  }
}

TEST(Continuous, ConvergesToAnalyticIntegral) {
  // 1/π ∫_0^π (0.5 + 0.4 sin x) dx = 0.5 + 0.8/π
  const double exact = 0.5 + 0.8 / std::numbers::pi;
  double previous = 1.0;
  for (int n : {33, 65, 129, 257}) {
    const auto nodes = grid(0, std::numbers::pi, n);
    const auto a = sampled(nodes, [](double x) { return make_element({0.5 + 0.4 * std::sin(x)}); });
    const auto b = constant(nodes, make_element({0.0}));
    const double err =
        std::abs(continuous_distance(a, b, std::nullopt, 1, DV::type2_normalized) - exact);
    EXPECT_LT(err, previous / 3.5) << n;  // second-order rule
    previous = err;
  }
  EXPECT_LT(previous, 1e-5);
}

TEST(Continuous, PrefactorIsPerNode) {
  // lengths 1 on the left half and 4 on the right, full deviation everywhere:
  // n_x^{-1/p} (Σ 1)^{1/p} = 1 at every node, so s10 = 0 for any p
  const std::vector<double> nodes{0, 0.5, 1};
  const SampledHesitantFunction a(nodes, {make_element({1.0}), make_element({1, 1, 1, 1}, false),
                                          make_element({1, 1, 1, 1}, false)});
  const SampledHesitantFunction b(nodes, {make_element({0.0}), make_element({0, 0, 0, 0}, false),
                                          make_element({0, 0, 0, 0}, false)});
  for (double p : {1.0, 2.0, 5.0}) {
    EXPECT_NEAR(continuous_similarity(a, b, std::nullopt, p, SV::geometric_sum_normalized), 0.0,
                1e-15);
  }
}

TEST(Continuous, Validation) {
  const auto nodes = grid(0, 1, 5);
  const auto a = constant(nodes, make_element({0.2}));
  const auto b = constant(grid(0, 1, 6), make_element({0.2}));
  EXPECT_THROW(continuous_distance(a, b, std::nullopt, 1, DV::lp_average), GridMismatch);
  const auto w_other = SampledWeightFunction::uniform(grid(0, 1, 6));
  EXPECT_THROW(continuous_distance(a, a, w_other, 1, DV::lp_weighted), GridMismatch);
  EXPECT_THROW(continuous_distance(a, a, std::nullopt, 1, DV::lp_weighted), InvalidSpec);
  EXPECT_THROW(continuous_distance(a, a, SampledWeightFunction::uniform(nodes), 1, DV::lp_average),
               InvalidSpec);
  EXPECT_THROW(continuous_distance(a, a, std::nullopt, 0.5, DV::lp_average), InvalidSpec);
  EXPECT_NO_THROW(continuous_distance(a, a, std::nullopt, 0.5, DV::type2_normalized));

  EXPECT_THROW(SampledHesitantFunction({0.0}, {make_element({0.1})}), InvalidSpec);
  EXPECT_THROW(SampledHesitantFunction({0.0, 0.0}, {make_element({0.1}), make_element({0.1})}),
               InvalidSpec);
  EXPECT_THROW(SampledHesitantFunction({0.0, 1.0}, {make_element({0.1})}), InvalidSpec);
  EXPECT_THROW(SampledWeightFunction({0.0, 1.0}, {0.5, 0.5}), WeightNotNormalized);
  EXPECT_THROW(SampledWeightFunction({0.0, 0.5}, {2.0, 2.0}), WeightNotNormalized);
  EXPECT_NO_THROW(SampledWeightFunction({0.0, 1.0}, {1.0, 1.0}));
}

}  // namespace
}  // namespace hfsim
