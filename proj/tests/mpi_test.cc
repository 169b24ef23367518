// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcota/mpi.h"

#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "qcota/core.h"
#include "qcota/errors.h"

namespace qcota {
namespace {

PriorityScores Ps(std::vector<double> v) {
  PriorityScores p;
  p.ps = std::move(v);
  return p;
}

TEST(UnifiedPriorityTest, DotProduct) {
  const std::vector<PriorityScores> ps = {Ps({1.0, 0.0}), Ps({2.0, 1.0})};
  const std::vector<double> w = {0.4, 0.6};
  EXPECT_DOUBLE_EQ(UnifiedPriority(ps, w).ups[0], 1.6);
  EXPECT_DOUBLE_EQ(UnifiedPriority(ps, w).ups[1], 0.6);
}

TEST(UnifiedPriorityTest, SingleAttributeAndUniformWeights) {
  const std::vector<PriorityScores> one = {Ps({0.3, 0.9, 0.1})};
  EXPECT_EQ(UnifiedPriority(one, std::vector<double>{1.0}).ups, one[0].ps);
  const std::vector<PriorityScores> three = {Ps({0.3, 0.9}), Ps({0.6, 0.0}), Ps({0.0, 0.3})};
  const AttributeWeights w = AttributeWeights::Uniform(3);
  const UnifiedScores u = UnifiedPriority(three, w.w);
  EXPECT_NEAR(u.ups[0], 0.3, 1e-15);
  EXPECT_NEAR(u.ups[1], 0.4, 1e-15);
}

TEST(UnifiedPriorityTest, LengthMismatchIsDomainError) {
  const std::vector<PriorityScores> ps = {Ps({1.0, 0.0}), Ps({2.0})};
  EXPECT_THROW(UnifiedPriority(ps, std::vector<double>{0.5, 0.5}), DomainError);
  EXPECT_THROW(UnifiedPriority(ps, std::vector<double>{1.0}), DomainError);
}

TEST(EstimateLossTest, Examples) {
  const std::vector<double> is = {1.0, 2.0, 3.0};
  EXPECT_EQ(EstimateLoss(is, is, 0.95), 0.0);
  // Residuals 0.5 and 1.5: mean 1, sample sd sqrt(0.5).
  const std::vector<double> cs = {1.5, 3.5};
  const std::vector<double> inf = {1.0, 2.0};
  EXPECT_NEAR(EstimateLoss(inf, cs, 0.95), 1.0 + std::sqrt(0.5) * 1.6448536269514722,
              1e-12);
  EXPECT_DOUBLE_EQ(EstimateLoss(std::vector<double>{2.0}, std::vector<double>{2.7}, 0.6),
                   std::abs(2.7 - 2.0));
}

TEST(EstimateLossTest, MuOneSigmaHalf) {
  // Residuals 0.5 and 1.5 scaled so the sample sd is exactly 0.5.
  const double h = 0.5 / std::sqrt(2.0);
  const std::vector<double> cs = {1.0 - h, 1.0 + h};
  const std::vector<double> inf = {0.0, 0.0};
  EXPECT_NEAR(EstimateLoss(inf, cs, 0.95), 1.82243, 1e-5);
}

TEST(EstimateLossTest, RejectsBadInput) {
  EXPECT_THROW(EstimateLoss({}, {}, 0.95), DomainError);
  EXPECT_THROW(EstimateLoss(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}, 0.95),
               DomainError);
}

TEST(NormalQuantileTest, KnownValues) {
  EXPECT_NEAR(NormalQuantile(0.95), 1.6448536269514722, 1e-14);
  EXPECT_NEAR(NormalQuantile(0.5), 0.0, 1e-15);
  EXPECT_NEAR(NormalQuantile(0.975), 1.959963984540054, 1e-14);
}

TEST(UpdateWeightsTest, Examples) {
  const std::vector<double> w = {0.5, 0.5};
  const WeightUpdate u = UpdateWeights(w, std::vector<double>{0.0, 1.0}, 0.5);
  EXPECT_NEAR(u.weights[0], 0.62246, 1e-5);
  EXPECT_NEAR(u.weights[1], 0.37754, 1e-5);
  EXPECT_FALSE(u.reset_to_uniform);
  const std::vector<double> w3 = {0.2, 0.3, 0.5};
  const WeightUpdate same = UpdateWeights(w3, std::vector<double>{0.7, 0.7, 0.7}, 0.5);
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(same.weights[a], w3[a], 1e-15);
  const WeightUpdate frozen = UpdateWeights(w3, std::vector<double>{0.1, 5.0, 2.0}, 0.0);
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(frozen.weights[a], w3[a], 1e-15);
}

TEST(UpdateWeightsTest, UnderflowResetsToUniform) {
  const std::vector<double> w = {0.5, 0.5};
  const WeightUpdate u = UpdateWeights(w, std::vector<double>{1e6, 2e6}, 1.0);
  EXPECT_TRUE(u.reset_to_uniform);
  EXPECT_EQ(u.weights, (std::vector<double>{0.5, 0.5}));
}

TEST(UpdateWeightsTest, RejectsNegativeOrNonFiniteLoss) {
  const std::vector<double> w = {0.5, 0.5};
  EXPECT_THROW(UpdateWeights(w, std::vector<double>{-0.1, 0.0}, 0.5), DomainError);
  EXPECT_THROW(UpdateWeights(w, std::vector<double>{NAN, 0.0}, 0.5), DomainError);
}

TEST(UpdateWeightsProperty, SumOneAndLowerLossGrowsFaster) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w = AttributeWeights::Uniform(4).w;
  for (int step = 0; step < 200; ++step) {
    std::vector<double> loss(4);
    for (double& l : loss) l = u(rng);
    const WeightUpdate next = UpdateWeights(w, loss, 0.5);
    EXPECT_NEAR(std::accumulate(next.weights.begin(), next.weights.end(), 0.0), 1.0, 1e-12);
    for (int a = 0; a < 4; ++a) {
      EXPECT_GT(next.weights[a], 0.0);
      for (int b = 0; b < 4; ++b) {
        if (loss[a] < loss[b]) {
          EXPECT_GT(next.weights[a] / w[a], next.weights[b] / w[b]);
        }
      }
    }
    w = next.weights;
  }
}

TEST(UpdateWeightsProperty, RenormalizationKeepsUpsRanking) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PriorityScores> ps(3);
    for (auto& p : ps) {
      p.ps.resize(9);
      for (double& v : p.ps) v = u(rng);
    }
    std::vector<double> raw = {0.5, 0.5, 0.5};
    std::vector<double> loss = {u(rng), u(rng), u(rng)};
    for (int a = 0; a < 3; ++a) raw[a] *= std::exp(-0.5 * loss[a]);
    const WeightUpdate norm = UpdateWeights(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3},
                                            loss, 0.5);
    EXPECT_EQ(RankDescending(UnifiedPriority(ps, raw).ups),
              RankDescending(UnifiedPriority(ps, norm.weights).ups));
  }
}

TEST(LossNormalizerTest, RunningMinMaxPerAttribute) {
  LossNormalizer n(2);
  EXPECT_EQ(n.Normalize(0, 4.0), 0.0);
  EXPECT_EQ(n.Normalize(0, 6.0), 1.0);
  EXPECT_EQ(n.Normalize(0, 5.0), 0.5);
  EXPECT_EQ(n.Normalize(0, 2.0), 0.0);
  EXPECT_EQ(n.Normalize(1, 100.0), 0.0);
  EXPECT_EQ(n.Normalize(1, 100.0), 0.0);
  EXPECT_EQ(n.Normalize(1, 300.0), 1.0);
  EXPECT_EQ(n.Normalize(0, 5.0), 0.75);
}

}  // namespace
}  // namespace qcota
