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

// Single-attribute priority estimation: temporal entropy (uncertainty) and
// spatial mutual information (representativeness) of each cell's inferred
// series, blended into a per-cell priority score.

#ifndef QCOTA_SPE_H_
#define QCOTA_SPE_H_

#include <span>
#include <vector>

#include "qcota/core.h"

namespace qcota {

inline constexpr double kMaxSquaredCorrelation = 1.0 - 1e-9;

struct SpeParams {
  double alpha_te = 0.5;
  double alpha_smi = 0.5;
  int window = 0;  // trailing cycles for TE; 0 = all
  double sigma_floor = 1e-6;
  // Min-max normalize TE and SMI across cells before blending.
  bool normalize = true;
};

struct PriorityScores {
  int attribute = 0;
  int cycle = 0;
  // Blend inputs: normalized when SpeParams::normalize, so that
  // ps[x] == alpha_te * te[x] + alpha_smi * smi[x].
  std::vector<double> te;
  std::vector<double> smi;
  std::vector<double> ps;
  std::vector<double> raw_te;
  std::vector<double> raw_smi;
  double alpha_te = 0.5;
  double alpha_smi = 0.5;
};

// Differential entropy 0.5 ln(2 pi e sigma^2) of a normal fitted to the last
// `window` values (0 = all). sigma is the n-1 sample standard deviation,
// floored at `sigma_floor`; a single value uses the floor.
double TemporalEntropy(std::span<const double> series, int window,
                       double sigma_floor);

// Gaussian mutual information -0.5 ln(1 - r^2) from the Pearson correlation,
// r^2 capped at kMaxSquaredCorrelation. 0 if either series is constant.
double PairwiseMutualInformation(std::span<const double> u,
                                 std::span<const double> v);

// Sum of pairwise MI between `target` and each of `others`.
double SpatialMutualInformation(std::span<const double> target,
                                std::span<const std::span<const double>> others);

// Min-max to [0, 1]; a constant vector maps to all zeros.
std::vector<double> MinMaxNormalize(std::span<const double> v);

// Priorities from one series per cell (all the same length >= 1).
PriorityScores ComputePriorities(std::span<const std::span<const double>> series,
                                 const SpeParams& params);

// Priorities for `attribute` from the IS history of cycles 0..history-1.
// Requires history >= 1; the result is tagged with cycle `history`.
PriorityScores ComputePriorities(const MeasurementStore& store, int attribute,
                                 int history, const SpeParams& params);

}  // namespace qcota

#endif  // QCOTA_SPE_H_
