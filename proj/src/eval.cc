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

#include "qcota/eval.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qcota/errors.h"

namespace qcota {

double SensingError(double inferred, double real) {
  return std::abs(inferred - real);
}

ErrorNormalization ComputeNormalization(const MeasurementStore& store,
                                        int first_cycle, int end_cycle) {
  if (first_cycle < 0 || end_cycle > store.num_cycles() ||
      first_cycle >= end_cycle) {
    throw DomainError("empty or out-of-range evaluation horizon");
  }
  ErrorNormalization norm;
  for (int a = 0; a < store.num_attributes(); ++a) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int x = 0; x < store.num_cells(); ++x) {
      for (int y = first_cycle; y < end_cycle; ++y) {
        lo = std::min(lo, store.real(a, x, y));
        hi = std::max(hi, store.real(a, x, y));
      }
    }
    double range = hi - lo;
    if (range < kMinNormalizationRange) {
      norm.warnings.push_back("attribute " + std::to_string(a) +
                              " has a degenerate ground-truth range");
      range = kMinNormalizationRange;
    }
    norm.range.push_back(range);
  }
  return norm;
}

namespace {

double MeanCellError(const MeasurementStore& store, int a, int y) {
  if (!store.has_inferred(y)) {
    throw DomainError("cycle " + std::to_string(y) + " has not been inferred");
  }
  double sum = 0.0;
  for (int x = 0; x < store.num_cells(); ++x) {
    sum += SensingError(store.inferred(a, x, y), store.real(a, x, y));
  }
  return sum / store.num_cells();
}

}  // namespace

double CycleNormalizedError(const MeasurementStore& store, int cycle,
                            const ErrorNormalization& norm) {
  double total = 0.0;
  for (int a = 0; a < store.num_attributes(); ++a) {
    total += norm.Apply(a, MeanCellError(store, a, cycle));
  }
  return total;
}

double AggregatedSensingError(const MeasurementStore& store, int first_cycle,
                              int end_cycle, const ErrorNormalization& norm) {
  if (first_cycle >= end_cycle) throw DomainError("empty evaluation horizon");
  for (int y = first_cycle; y < end_cycle; ++y) {
    if (!store.has_inferred(y)) {
      throw DomainError("cycle " + std::to_string(y) + " has not been inferred");
    }
  }
  double total = 0.0;
  for (int a = 0; a < store.num_attributes(); ++a) {
    double sum = 0.0;
    for (int y = first_cycle; y < end_cycle; ++y) sum += MeanCellError(store, a, y);
    total += norm.Apply(a, sum / (end_cycle - first_cycle));
  }
  return total;
}

double AverageCost(std::span<const AllocationPlan> plans, const CostModel& model,
                   const GridGeometry& geom, int num_participants) {
  if (plans.empty()) return 0.0;
  double total = 0.0;
  for (const AllocationPlan& plan : plans) {
    total += PlanCost(plan, model, geom, num_participants);
  }
  return total / static_cast<double>(plans.size());
}

}  // namespace qcota
