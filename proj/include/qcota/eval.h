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

// Sensing-error and travel-cost metrics.

#ifndef QCOTA_EVAL_H_
#define QCOTA_EVAL_H_

#include <span>
#include <string>
#include <vector>

#include "qcota/core.h"

namespace qcota {

inline constexpr double kMinNormalizationRange = 1e-9;

double SensingError(double inferred, double real);

// Per-attribute error normalization: e / (max RS - min RS) over the
// evaluated cycles, the range floored at kMinNormalizationRange.
struct ErrorNormalization {
  std::vector<double> range;
  std::vector<std::string> warnings;

  double Apply(int attribute, double error) const {
    return error / range[attribute];
  }
};

// Ranges of RS over cycles [first_cycle, end_cycle).
ErrorNormalization ComputeNormalization(const MeasurementStore& store,
                                        int first_cycle, int end_cycle);

// sum_a mean_x SE normalized, for one cycle.
double CycleNormalizedError(const MeasurementStore& store, int cycle,
                            const ErrorNormalization& norm);

// sum_a normalize(mean over cycles [first, end) of mean over cells of SE).
// Every cycle in the range must be inferred.
double AggregatedSensingError(const MeasurementStore& store, int first_cycle,
                              int end_cycle, const ErrorNormalization& norm);

// Mean over plans of the per-participant mean travel cost.
double AverageCost(std::span<const AllocationPlan> plans, const CostModel& model,
                   const GridGeometry& geom, int num_participants);

}  // namespace qcota

#endif  // QCOTA_EVAL_H_
