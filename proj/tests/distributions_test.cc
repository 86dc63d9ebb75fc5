// Copyright 2026 The LDP Bandits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldpb/distributions.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace ldpb {
namespace {

constexpr int kNumSamples = 1000000;

std::vector<ArmDistribution> Zoo() {
  return {
      ArmDistribution::MakeBernoulli(0.9),   ArmDistribution::MakeBernoulli(0.35),
      ArmDistribution::MakeBeta(4.0, 1.0),   ArmDistribution::MakeBeta(0.5, 0.5),
      ArmDistribution::MakeBeta(2.0, 5.0),   ArmDistribution::MakeTwoPoint(0.4, 1.0, 0.5),
      ArmDistribution::MakeTwoPoint(0.1, 0.3, 0.8), ArmDistribution::MakeUniform(0.0, 1.0),
      ArmDistribution::MakeUniform(0.2, 0.45),
  };
}

// Kummer's series 1F1(a; a + b; z) = sum_k (a)_k / (a + b)_k z^k / k!, the
// moment generating function of Beta(a, b).
double KummerBetaMgf(double a, double b, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= (a + k) / (a + b + k) * z / (k + 1);
    sum += term;
    if (std::abs(term) < 1e-18 * sum) break;
  }
  return sum;
}

TEST(SampleTest, DegenerateBernoulli) {
  Rng rng(1);
  const auto dist = ArmDistribution::MakeBernoulli(1.0);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(Sample(dist, rng), 1.0);
}

TEST(SampleTest, PresetLawsHaveExpectedMeans) {
  Rng rng(2);
  struct Case {
    ArmDistribution dist;
    double mean;
    double var;
  };
  const std::vector<Case> cases = {
      {ArmDistribution::MakeTwoPoint(0.4, 1.0, 0.5), 0.7, 0.09},
      {ArmDistribution::MakeBeta(4.0, 1.0), 0.8, 4.0 / 150.0},
  };
  for (const auto& c : cases) {
    double sum = 0.0;
    for (int i = 0; i < kNumSamples; ++i) sum += Sample(c.dist, rng);
    EXPECT_NEAR(sum / kNumSamples, c.mean, 3.0 * std::sqrt(c.var / kNumSamples))
        << ToString(c.dist);
  }
}

TEST(SampleTest, EmpiricalMomentsMatchAnalytic) {
  Rng rng(3);
  for (const auto& dist : Zoo()) {
    std::vector<double> xs(kNumSamples);
    double sum = 0.0;
    for (auto& x : xs) {
      x = Sample(dist, rng);
      ASSERT_GE(x, 0.0);
      ASSERT_LE(x, 1.0);
      sum += x;
    }
    const double mean = sum / kNumSamples;
    double m2 = 0.0;
    double m4 = 0.0;
    for (double x : xs) {
      const double d = x - mean;
      m2 += d * d;
      m4 += d * d * d * d;
    }
    m2 /= kNumSamples;
    m4 /= kNumSamples;
    const double var = Variance(dist);
    EXPECT_NEAR(mean, Mean(dist), 4.0 * std::sqrt(var / kNumSamples))
        << ToString(dist);
    EXPECT_NEAR(m2, var, 4.0 * std::sqrt((m4 - m2 * m2) / kNumSamples) + 1e-15)
        << ToString(dist);
  }
}

TEST(MomentsTest, Examples) {
  const auto bern = ArmDistribution::MakeBernoulli(0.9);
  EXPECT_DOUBLE_EQ(Mean(bern), 0.9);
  EXPECT_NEAR(Variance(bern), 0.09, 1e-15);
  const auto beta = ArmDistribution::MakeBeta(4.0, 1.0);
  EXPECT_DOUBLE_EQ(Mean(beta), 0.8);
  EXPECT_NEAR(Variance(beta), 0.0266666666666667, 1e-15);
  const auto uni = ArmDistribution::MakeUniform(0.0, 1.0);
  EXPECT_DOUBLE_EQ(Mean(uni), 0.5);
  EXPECT_DOUBLE_EQ(Variance(uni), 1.0 / 12.0);
  const auto two = ArmDistribution::MakeTwoPoint(0.4, 1.0, 0.5);
  EXPECT_DOUBLE_EQ(Mean(two), 0.7);
  EXPECT_NEAR(Variance(two), 0.09, 1e-15);
}

TEST(MgfTest, ZeroEpsilonIsOne) {
  for (const auto& dist : Zoo()) EXPECT_EQ(Mgf(dist, 0.0), 1.0);
}

TEST(MgfTest, ClosedFormExamples) {
  EXPECT_NEAR(Mgf(ArmDistribution::MakeBernoulli(0.9), 1.0),
              2.5464536456131407, 1e-14);
  EXPECT_NEAR(Mgf(ArmDistribution::MakeUniform(0.0, 1.0), 1.0),
              1.7182818284590452, 1e-14);
  EXPECT_NEAR(Mgf(ArmDistribution::MakeTwoPoint(0.4, 1.0, 0.5), 1.0),
              0.5 * (std::exp(0.4) + std::exp(1.0)), 1e-14);
}

TEST(MgfTest, BetaQuadratureMatchesFrozenHypergeometricValues) {
  // 1F1(a; a+b; eps) at 50 digits, see tests/oracles/derive_expected.py.
  EXPECT_NEAR(Mgf(ArmDistribution::MakeBeta(4.0, 1.0), 1.0),
              2.2537453723276381, 2.2537453723276381 * 1e-10);
  EXPECT_NEAR(Mgf(ArmDistribution::MakeBeta(0.5, 0.5), 2.0),
              3.4415238691253353, 3.4415238691253353 * 1e-10);
  EXPECT_NEAR(Mgf(ArmDistribution::MakeBeta(2.0, 5.0), 3.0),
              2.6705443492589279, 2.6705443492589279 * 1e-10);
}

TEST(MgfTest, BetaQuadratureMatchesKummerSeries) {
  for (double a : {0.3, 1.0, 4.0, 25.0}) {
    for (double b : {0.4, 1.0, 3.0, 60.0}) {
      for (double eps : {0.1, 1.0, 2.0, 5.0}) {
        const double expected = KummerBetaMgf(a, b, eps);
        EXPECT_NEAR(Mgf(ArmDistribution::MakeBeta(a, b), eps), expected,
                    1e-10 * expected)
            << "a=" << a << " b=" << b << " eps=" << eps;
      }
    }
  }
}

TEST(MgfTest, ContinuousAtZeroAndIncreasing) {
  for (const auto& dist : Zoo()) {
    EXPECT_NEAR(Mgf(dist, 1e-9), 1.0, 1e-8) << ToString(dist);
    double prev = 1.0;
    for (double eps = 0.05; eps <= 6.0; eps += 0.05) {
      const double m = Mgf(dist, eps);
      EXPECT_GT(m, prev) << ToString(dist) << " eps=" << eps;
      prev = m;
    }
  }
}

TEST(MgfTest, RejectsBadEpsilon) {
  const auto dist = ArmDistribution::MakeBernoulli(0.5);
  EXPECT_THROW(Mgf(dist, -0.1), DomainError);
  EXPECT_THROW(Mgf(dist, std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(Mgf(dist, std::nan("")), DomainError);
}

TEST(JensenGapTest, Examples) {
  EXPECT_NEAR(JensenGap(ArmDistribution::MakeBernoulli(1.0), 2.0), 0.0, 1e-15);
  EXPECT_NEAR(JensenGap(ArmDistribution::MakeBernoulli(0.5), 1.0),
              0.21041964352939447, 1e-14);
  EXPECT_NEAR(JensenGap(ArmDistribution::MakeBeta(4.0, 1.0), 1.0),
              0.028204443835170513, 1e-10);
}

TEST(JensenGapTest, BetaMatchesMonteCarlo) {
  constexpr int kDraws = 10000000;
  const auto dist = ArmDistribution::MakeBeta(4.0, 1.0);
  Rng rng(4);
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double v = std::exp(Sample(dist, rng));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / kDraws;
  const double se = std::sqrt((sq / kDraws - mean * mean) / kDraws);
  EXPECT_NEAR(JensenGap(dist, 1.0), mean - std::exp(0.8), 3.0 * se);
}

TEST(JensenGapTest, NonNegative) {
  for (const auto& dist : Zoo()) {
    for (double eps : {0.0, 0.01, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      EXPECT_GE(JensenGap(dist, eps), -1e-12 * std::exp(eps))
          << ToString(dist) << " eps=" << eps;
    }
  }
}

TEST(ArmDistributionTest, RejectsInvalidParameters) {
  EXPECT_THROW(ArmDistribution::MakeBernoulli(1.1), DomainError);
  EXPECT_THROW(ArmDistribution::MakeBernoulli(-0.1), DomainError);
  EXPECT_THROW(ArmDistribution::MakeBeta(0.0, 1.0), DomainError);
  EXPECT_THROW(ArmDistribution::MakeBeta(1.0, -2.0), DomainError);
  EXPECT_THROW(ArmDistribution::MakeTwoPoint(0.5, 0.5, 0.5), DomainError);
  EXPECT_THROW(ArmDistribution::MakeTwoPoint(0.0, 1.2, 0.5), DomainError);
  EXPECT_THROW(ArmDistribution::MakeTwoPoint(0.0, 1.0, 1.5), DomainError);
  EXPECT_THROW(ArmDistribution::MakeUniform(0.6, 0.2), DomainError);
  EXPECT_THROW(ArmDistribution::MakeUniform(-0.1, 0.2), DomainError);
}

TEST(ArmDistributionTest, TextForm) {
  EXPECT_EQ(ToString(ArmDistribution::MakeBernoulli(0.9)), "bernoulli(0.9)");
  EXPECT_EQ(ToString(ArmDistribution::MakeBeta(4, 1)), "beta(4,1)");
  EXPECT_EQ(ToString(ArmDistribution::MakeTwoPoint(0.4, 1, 0.5)),
            "twopoint(0.4,1,0.5)");
  EXPECT_EQ(ToString(ArmDistribution::MakeUniform(0, 1)), "uniform(0,1)");
}

TEST(BanditEnvironmentTest, GapsAndOptimalArm) {
  BanditEnvironment env({ArmDistribution::MakeBernoulli(0.6),
                         ArmDistribution::MakeBernoulli(0.9),
                         ArmDistribution::MakeUniform(0.0, 1.0)});
  EXPECT_EQ(env.size(), 3u);
  EXPECT_EQ(env.optimal_arm(), 1u);
  EXPECT_DOUBLE_EQ(env.optimal_mean(), 0.9);
  EXPECT_NEAR(env.gap(0), 0.3, 1e-15);
  EXPECT_EQ(env.gap(1), 0.0);
  EXPECT_NEAR(env.min_gap(), 0.3, 1e-15);
  EXPECT_NEAR(env.max_gap(), 0.4, 1e-15);
  EXPECT_FALSE(env.is_degenerate());
}

TEST(BanditEnvironmentTest, TiesAndSingleArmAreDegenerate) {
  BanditEnvironment tied({ArmDistribution::MakeBernoulli(0.5),
                          ArmDistribution::MakeUniform(0.0, 1.0)});
  EXPECT_EQ(tied.min_gap(), 0.0);
  EXPECT_TRUE(tied.is_degenerate());
  BanditEnvironment single({ArmDistribution::MakeBernoulli(0.5)});
  EXPECT_TRUE(single.is_degenerate());
  EXPECT_THROW(BanditEnvironment({}), DomainError);
}

}  // namespace
}  // namespace ldpb
