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

#include "qcota/spe.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qcota/core.h"

namespace qcota {
namespace {

std::vector<std::span<const double>> Spans(const std::vector<std::vector<double>>& v) {
  return {v.begin(), v.end()};
}

TEST(TemporalEntropyTest, ClosedForms) {
  EXPECT_NEAR(TemporalEntropy(std::vector<double>{-1.0, 1.0}, 0, 1e-6),
              1.41894 + 0.5 * std::log(2.0), 1e-5);
  const std::vector<double> unit = {-1.0, 0.0, 1.0};  // sample sd 1
  EXPECT_NEAR(TemporalEntropy(unit, 0, 1e-6), 1.41894, 1e-5);
  EXPECT_NEAR(TemporalEntropy(std::vector<double>{0.0, 2.0}, 0, 1e-6), 1.76551, 1e-5);
  EXPECT_NEAR(TemporalEntropy(std::vector<double>(6, 4.0), 0, 1e-6), -12.3966, 1e-4);
  EXPECT_NEAR(TemporalEntropy(std::vector<double>{3.0}, 0, 1e-6), -12.3966, 1e-4);
}

TEST(TemporalEntropyTest, WindowUsesTrailingValues) {
  const std::vector<double> s = {100.0, -50.0, 0.0, 2.0};
  EXPECT_DOUBLE_EQ(TemporalEntropy(s, 2, 1e-6),
                   TemporalEntropy(std::vector<double>{0.0, 2.0}, 0, 1e-6));
  EXPECT_DOUBLE_EQ(TemporalEntropy(s, 10, 1e-6), TemporalEntropy(s, 0, 1e-6));
}

TEST(TemporalEntropyTest, MonotoneInSpread) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> base;
  for (int i = 0; i < 15; ++i) base.push_back(n(rng));
  double last = -INFINITY;
  for (double scale : {0.0, 1e-8, 0.01, 0.5, 1.0, 3.0, 100.0}) {
    std::vector<double> s = base;
    for (double& v : s) v *= scale;
    const double te = TemporalEntropy(s, 0, 1e-6);
    EXPECT_GE(te, last);
    last = te;
  }
}

TEST(MutualInformationTest, Examples) {
  const std::vector<double> u = {1, 2, 3, 4};
  const std::vector<double> orth = {1, -1, -1, 1};
  EXPECT_NEAR(PairwiseMutualInformation(u, orth), 0.0, 1e-15);
  const std::vector<double> same = u;
  EXPECT_NEAR(PairwiseMutualInformation(u, same), 10.3616, 1e-4);
  const std::vector<double> flat(4, 2.0);
  EXPECT_EQ(PairwiseMutualInformation(u, flat), 0.0);
}

TEST(MutualInformationTest, CorrelationPointEight) {
  // Pearson r = 0.8 by construction: v = 0.8 u + 0.6 w with u, w orthonormal.
  const std::vector<double> u = {1, -1, 1, -1};
  const std::vector<double> w = {1, 1, -1, -1};
  std::vector<double> v(4);
  for (int i = 0; i < 4; ++i) v[i] = 0.8 * u[i] + 0.6 * w[i];
  EXPECT_NEAR(PairwiseMutualInformation(u, v), 0.51083, 1e-5);
  const std::vector<std::vector<double>> others = {v};
  EXPECT_NEAR(SpatialMutualInformation(u, Spans(others)), 0.51083, 1e-5);
}

TEST(MutualInformationTest, SymmetricAndNonNegative) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> u(9), v(9);
    for (int i = 0; i < 9; ++i) {
      u[i] = n(rng);
      v[i] = 0.5 * u[i] + n(rng);
    }
    EXPECT_DOUBLE_EQ(PairwiseMutualInformation(u, v), PairwiseMutualInformation(v, u));
    EXPECT_GE(PairwiseMutualInformation(u, v), 0.0);
  }
}

TEST(MinMaxNormalizeTest, RangeAndConstant) {
  EXPECT_EQ(MinMaxNormalize(std::vector<double>{2, 4, 3}),
            (std::vector<double>{0.0, 1.0, 0.5}));
  EXPECT_EQ(MinMaxNormalize(std::vector<double>{5, 5}), (std::vector<double>{0.0, 0.0}));
}

// Four cells, ten cycles; reference values from tests/oracles/spe_oracle.py.
const std::vector<std::vector<double>> kHistory = {
    {3.1, 3.4, 2.9, 3.8, 4.0, 3.6, 3.2, 3.9, 4.4, 4.1},
    {12.0, 12.5, 11.8, 13.1, 13.3, 12.9, 12.2, 13.4, 13.9, 13.5},
    {7.0, 6.1, 7.4, 6.6, 5.9, 7.2, 6.8, 6.0, 7.5, 6.4},
    {20.0, 20.0, 20.0, 20.0, 20.0, 20.0, 20.0, 20.0, 20.0, 20.0}};

TEST(ComputePrioritiesTest, FourCellFixtureMatchesReference) {
  SpeParams params;
  const PriorityScores ps = ComputePriorities(Spans(kHistory), params);
  const std::vector<double> raw_te = {0.6922463919742947, 1.068348857076068,
                                      0.8810021323553625, -12.396572024759601};
  const std::vector<double> raw_smi = {2.235388739346548, 2.238736677076186,
                                       0.06391038259469917, 0.0};
  const std::vector<double> expected = {0.9852862598086332, 1.0,
                                        0.5073169159479161, 0.0};
  for (int x = 0; x < 4; ++x) {
    EXPECT_NEAR(ps.raw_te[x], raw_te[x], 1e-12) << x;
    EXPECT_NEAR(ps.raw_smi[x], raw_smi[x], 1e-12) << x;
    EXPECT_NEAR(ps.ps[x], expected[x], 1e-12) << x;
  }
}

TEST(ComputePrioritiesTest, BlendIsExactAndSmiNonNegative) {
  SpeParams params;
  params.alpha_te = 0.3;
  params.alpha_smi = 0.9;
  const PriorityScores ps = ComputePriorities(Spans(kHistory), params);
  for (int x = 0; x < 4; ++x) {
    EXPECT_EQ(ps.ps[x], 0.3 * ps.te[x] + 0.9 * ps.smi[x]);
    EXPECT_GE(ps.smi[x], 0.0);
    EXPECT_GE(ps.raw_smi[x], 0.0);
  }
}

TEST(ComputePrioritiesTest, DegenerateWeightsFollowTe) {
  SpeParams params;
  params.alpha_te = 1.0;
  params.alpha_smi = 0.0;
  const PriorityScores ps = ComputePriorities(Spans(kHistory), params);
  EXPECT_EQ(RankDescending(ps.ps), RankDescending(ps.raw_te));
}

TEST(ComputePrioritiesTest, SymmetricBlend) {
  // Two cells: one with higher entropy, the other with higher MI is not
  // constructible with two series, so check the blend on normalized inputs.
  const std::vector<double> te = MinMaxNormalize(std::vector<double>{1.0, 3.0});
  const std::vector<double> smi = MinMaxNormalize(std::vector<double>{5.0, 2.0});
  EXPECT_EQ(0.5 * te[0] + 0.5 * smi[0], 0.5);
  EXPECT_EQ(0.5 * te[1] + 0.5 * smi[1], 0.5);
}

TEST(ComputePrioritiesTest, RankingInvariantToCommonAlphaScale) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<double>> h(7, std::vector<double>(12));
    for (auto& s : h) for (double& v : s) v = n(rng);
    SpeParams a;
    a.alpha_te = 0.2;
    a.alpha_smi = 0.7;
    SpeParams b = a;
    b.alpha_te *= 13.0;
    b.alpha_smi *= 13.0;
    EXPECT_EQ(RankDescending(ComputePriorities(Spans(h), a).ps),
              RankDescending(ComputePriorities(Spans(h), b).ps));
  }
}

TEST(ComputePrioritiesTest, RawScaleAndFiniteOutputs) {
  SpeParams params;
  params.normalize = false;
  std::vector<std::vector<double>> h = kHistory;
  h.push_back(std::vector<double>(10, 1e300));
  h.push_back(h[0]);
  const PriorityScores ps = ComputePriorities(Spans(h), params);
  for (std::size_t x = 0; x < h.size(); ++x) {
    EXPECT_TRUE(std::isfinite(ps.ps[x]));
    EXPECT_EQ(ps.te[x], ps.raw_te[x]);
  }
}

TEST(ComputePrioritiesTest, StoreHistoryLengthOne) {
  ValueCube truth(1, 3, 4);
  MeasurementStore store(truth);
  store.SetInferredRow(0, 0, std::vector<double>{1.0, 5.0, 2.0});
  const PriorityScores ps = ComputePriorities(store, 0, 1, SpeParams());
  EXPECT_EQ(ps.cycle, 1);
  for (double v : ps.ps) EXPECT_EQ(v, 0.0);
}

}  // namespace
}  // namespace qcota
