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

// Spatial inference of uncollected cells from one cycle's collected values.

#ifndef QCOTA_INFERENCE_H_
#define QCOTA_INFERENCE_H_

#include <optional>
#include <span>
#include <vector>

#include "qcota/core.h"
#include "qcota/data.h"
#include "qcota/svr.h"

namespace qcota {

struct Sample {
  CellId cell = 0;
  double value = 0.0;
};

struct InferenceStrategy {
  InferenceKind kind = InferenceKind::kKnn;
  int k = 3;  // KNN neighbors
  int n = 3;  // IDW neighbors
  SvrParams svr;

  static InferenceStrategy Knn(int k) { return {InferenceKind::kKnn, k, 3, {}}; }
  static InferenceStrategy Idw(int n) { return {InferenceKind::kIdw, 3, n, {}}; }
  static InferenceStrategy Svr(SvrParams p = {}) {
    return {InferenceKind::kSvr, 3, 3, p};
  }
};

// Unweighted mean of the k nearest collected cells (k clamped to the sample
// count; distance ties resolved by lower cell id).
double KnnEstimate(std::span<const Sample> collected, const GridGeometry& geom,
                   int k, CellId target);

// sum(v_i / d_i) / sum(1 / d_i) over the n nearest collected cells. A
// neighbor at distance 0 returns its own value.
double IdwEstimate(std::span<const Sample> collected, const GridGeometry& geom,
                   int n, CellId target);

// RBF epsilon-SVR on cell coordinates. Fewer than two samples fall back to
// their mean.
double SvrEstimate(std::span<const Sample> collected, const GridGeometry& geom,
                   const SvrParams& params, CellId target);

// Estimates for many targets sharing one set of samples (a single SVR fit).
std::vector<double> EstimateCells(const InferenceStrategy& strategy,
                                  std::span<const Sample> collected,
                                  const GridGeometry& geom,
                                  std::span<const CellId> targets);

// IS row for (attribute, cycle): collected cells keep CS, the rest come from
// the strategy. With nothing collected the previous row is returned; throws
// DomainError if there is none.
std::vector<double> InferCycle(const InferenceStrategy& strategy,
                               const MeasurementStore& store,
                               const GridGeometry& geom, int cycle,
                               int attribute,
                               std::optional<std::span<const double>>
                                   previous_row = std::nullopt);

// Leave-one-out prediction at every sample from the remaining samples.
// Requires at least two samples.
std::vector<double> LeaveOneOutPredictions(const InferenceStrategy& strategy,
                                           std::span<const Sample> collected,
                                           const GridGeometry& geom);

}  // namespace qcota

#endif  // QCOTA_INFERENCE_H_
