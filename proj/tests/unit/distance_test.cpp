#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "generators.hpp"
#include "hfsim/distance.hpp"
#include "hfsim/error.hpp"
#include "hfsim/measures.hpp"
#include "naive_measures.hpp"

namespace hfsim {
namespace {

using testing::Generator;
using testing::single;

const HesitantSet kA = single("x", {0.5, 0.4});
const HesitantSet kB = single("x", {0.7, 0.4, 0.2});

DistanceSpec spec(DistanceFamily f, double p = 1.0) { return {f, p, std::nullopt}; }

const std::vector<std::string> kCodes{"d1", "d2", "d3", "d4", "type2-euclidean", "d5",
                                      "d6", "d7", "d8", "d9", "d10",             "d11"};

DistanceSpec coded(const std::string& code, double p, Generator& gen, std::size_t m) {
  auto s = distance_measure(code, p);
  if (is_weighted(s.family)) s.weights = gen.weights(m);
  return s;
}

TEST(Distance, HammingExample) {
  // (0.5,0.4) extends to (0.5,0.4,0.4): deviations 0.2, 0, 0.2
  EXPECT_NEAR(distance(kA, kB, spec(DistanceFamily::hamming)), 0.4 / 3.0, 1e-15);
}

TEST(Distance, HausdorffExample) {
  EXPECT_NEAR(distance(kA, kB, spec(DistanceFamily::hamming_hausdorff)), 0.2, 1e-15);
}

TEST(Distance, IdentityGivesZeroForEveryFamily) {
  Generator gen(21);
  const auto ids = gen.universe(4);
  const auto a = gen.set(ids);
  for (const auto& code : kCodes) {
    EXPECT_EQ(distance(a, a, coded(code, 3.0, gen, ids.size())), 0.0) << code;
  }
}

HesitantSet constant_set(const std::vector<std::size_t>& lengths, double v) {
  std::vector<HesitantSet::Entry> e;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    e.emplace_back("x" + std::to_string(i), make_element(std::vector<double>(lengths[i], v), false));
  }
  return HesitantSet(e);
}

TEST(Distance, UnboundedFamiliesReachTheirBounds) {
  const std::vector<std::size_t> lengths{1, 3, 4, 2, 5};
  const auto ones = constant_set(lengths, 1.0);
  const auto zeros = constant_set(lengths, 0.0);
  const double p = 3.0;
  double root_sum = 0;
  for (auto n : lengths) root_sum += std::pow(n, 1.0 / p);

  EXPECT_NEAR(distance(ones, zeros, spec(DistanceFamily::type2_sum, p)), 5.0, 1e-12);
  EXPECT_NEAR(distance(ones, zeros, spec(DistanceFamily::inner_power_sum, p)), root_sum, 1e-12);
  EXPECT_NEAR(distance(ones, zeros, spec(DistanceFamily::inner_power_mean, p)), root_sum / 5, 1e-12);
}

TEST(MaxDistance, Examples) {
  const std::vector<std::size_t> five{1, 2, 3, 4, 5};
  EXPECT_EQ(max_distance(spec(DistanceFamily::type2_sum, 2.0), five), 5.0);
  EXPECT_EQ(max_distance(spec(DistanceFamily::hamming), five), 1.0);
  const std::vector<std::size_t> fours{4, 4};
  EXPECT_NEAR(max_distance(spec(DistanceFamily::inner_power_sum, 2.0), fours), 4.0, 1e-15);
  EXPECT_THROW(max_distance(spec(DistanceFamily::hamming), std::vector<std::size_t>{0}), InvalidSpec);
}

TEST(MaxDistance, EqualsDistanceOfExtremePair) {
  Generator gen(22);
  const std::vector<std::size_t> lengths{2, 5, 1};
  const auto ones = constant_set(lengths, 1.0);
  const auto zeros = constant_set(lengths, 0.0);
  for (const auto& code : kCodes) {
    for (double p : {1.0, 2.0, 7.0}) {
      const auto s = coded(code, p, gen, lengths.size());
      EXPECT_NEAR(distance(ones, zeros, s), max_distance(s, lengths), 1e-12) << code << " p=" << p;
    }
  }
}

TEST(Distance, MatchesNaiveTranscription) {
  Generator gen(23);
  for (int t = 0; t < 400; ++t) {
    const auto [a, b] = gen.pair();
    const auto P = testing::naive::pairs(a, b);
    const double p = std::vector<double>{0.5, 1, 1.5, 2, 3, 6, 10}[gen.uniform_int(0, 6)];
    for (const auto& code : kCodes) {
      if ((code == "d8" || code == "d11") && p < 1) continue;
      const auto s = coded(code, p, gen, a.size());
      const std::vector<double> w =
          s.weights ? std::vector<double>(s.weights->values().begin(), s.weights->values().end())
                    : std::vector<double>{};
      EXPECT_NEAR(distance(a, b, s), testing::naive::distance(code, P, p, w), 1e-12)
          << code << " p=" << p;
    }
  }
}

TEST(Distance, OptimisticPolicyPadsWithMaximum) {
  // (0.5,0.4) -> (0.5,0.5,0.4) against (0.7,0.4,0.2): deviations 0.2, 0.1, 0.2
  EXPECT_NEAR(distance(kA, kB, spec(DistanceFamily::hamming), ExtensionPolicy::optimistic), 0.5 / 3,
              1e-15);
}

TEST(Distance, LargePIsStable) {
  const auto a = single("x", {0.03, 0.02});
  const auto b = single("x", {0.0});
  // (0.03^p + 0.02^p)^{1/p} underflows naively at p = 400
  const double d = distance(a, b, spec(DistanceFamily::lp, 400.0));
  EXPECT_NEAR(d, 0.03, 1e-15);
}

TEST(Distance, SpecValidation) {
  EXPECT_THROW(distance(kA, kB, spec(DistanceFamily::generalized, 0.0)), InvalidSpec);
  EXPECT_THROW(distance(kA, kB, spec(DistanceFamily::generalized, -1.0)), InvalidSpec);
  EXPECT_THROW(distance(kA, kB, spec(DistanceFamily::lp, 0.5)), InvalidSpec);
  EXPECT_THROW(distance(kA, kB, spec(DistanceFamily::lp_weighted, 2.0)), InvalidSpec);
  EXPECT_THROW(distance(kA, kB, {DistanceFamily::lp_weighted, 2.0, WeightVector({0.5, 0.5})}),
               InvalidSpec);
  EXPECT_THROW(distance(kA, kB, {DistanceFamily::hamming, 1.0, WeightVector({1.0})}), InvalidSpec);
  EXPECT_NO_THROW(distance(kA, kB, spec(DistanceFamily::inner_power_mean, 0.5)));
  EXPECT_THROW(distance(kA, single("y", {0.1}), spec(DistanceFamily::hamming)), UniverseMismatch);
}

TEST(Distance, FixedParameterFamiliesIgnoreP) {
  EXPECT_EQ(distance(kA, kB, spec(DistanceFamily::euclidean, 7.0)),
            distance(kA, kB, spec(DistanceFamily::generalized, 2.0)));
  EXPECT_EQ(distance(kA, kB, spec(DistanceFamily::type2_euclidean, -3.0)),
            distance(kA, kB, spec(DistanceFamily::type2_generalized, 2.0)));
}

TEST(ExponentialDistance, Examples) {
  EXPECT_EQ(exponential_distance(kA, kA, spec(DistanceFamily::hamming)), 0.0);
  // d = 2/15, d_max = 1; value from a 30-digit mpmath evaluation
  EXPECT_NEAR(exponential_distance(kA, kB, spec(DistanceFamily::hamming)), 0.19747290166986605,
              1e-15);
  const auto ones = single("x", {1.0});
  const auto zeros = single("x", {0.0});
  EXPECT_EQ(exponential_distance(ones, zeros, spec(DistanceFamily::hamming)), 1.0);
  EXPECT_EQ(exponential_distance(ones, zeros, spec(DistanceFamily::type2_sum, 3.0)), 1.0);
}

TEST(WeightVector, Validation) {
  EXPECT_NO_THROW(WeightVector({0.15, 0.3, 0.2, 0.35}));
  EXPECT_THROW(WeightVector({0.5, 0.6}), WeightNotNormalized);
  EXPECT_THROW(WeightVector({1.2, -0.2}), WeightNotNormalized);
  EXPECT_THROW(WeightVector(std::vector<double>{}), WeightNotNormalized);
  EXPECT_NO_THROW(WeightVector({0.5, 0.5 + 5e-10}));
  EXPECT_EQ(WeightVector::uniform(4)[2], 0.25);
}

TEST(Measures, Names) {
  EXPECT_EQ(distance_measure("d5", 2).family, DistanceFamily::type2_sum);
  EXPECT_EQ(distance_measure("hamming-hausdorff", 1).family, DistanceFamily::hamming_hausdorff);
  EXPECT_THROW(distance_measure("d12", 1), InvalidSpec);
  EXPECT_TRUE(is_distance_name("lp-weighted"));
  EXPECT_FALSE(is_distance_name("d18"));
}

}  // namespace
}  // namespace hfsim
