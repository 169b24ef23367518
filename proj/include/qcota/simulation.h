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

// The per-cycle simulation loop and the repeat/sweep experiment runners.

#ifndef QCOTA_SIMULATION_H_
#define QCOTA_SIMULATION_H_

#include <cstdint>
#include <random>
#include <vector>

#include "qcota/core.h"
#include "qcota/data.h"
#include "qcota/eval.h"
#include "qcota/inference.h"
#include "qcota/mpi.h"
#include "qcota/nts.h"
#include "qcota/spe.h"

namespace qcota {

// splitmix64 finalizer.
std::uint64_t MixSeed(std::uint64_t value);
// Seed of repeat `r` for a base seed.
std::uint64_t RepeatSeed(std::uint64_t base, int repeat);

struct CycleTrace {
  int cycle = 0;
  bool bootstrap = false;
  std::vector<CellId> selected_cells;
  std::vector<Assignment> assignments;
  // Attribute weights the allocation used.
  std::vector<double> weights;
  // Estimated losses after inference (weight-learning schemes only).
  std::vector<double> losses;
  std::vector<double> normalized_losses;
  double mean_cost = 0.0;
  double normalized_error = 0.0;
  int value_iteration_sweeps = 0;
};

// All cross-cycle state of one run. Copying a Simulation snapshots it; the
// copy advances independently and reproduces the same results.
class Simulation {
 public:
  // `dataset` is restricted to the config's attributes. Throws ConfigError
  // when the config does not fit the dataset.
  Simulation(const Dataset& dataset, const RunConfig& config);

  int cycle() const { return cycle_; }
  bool done() const { return cycle_ >= dataset_.num_cycles(); }

  // Allocation the scheme would make for the current cycle. Cycle 0 is a
  // uniform draw shared by every scheme. Advances the scheme's RNG for
  // UNS-TA.
  AllocationPlan PlanCycle();
  // Collects, infers every attribute, updates weights and records a trace.
  void ExecutePlan(const AllocationPlan& plan);
  void RunCycle() { ExecutePlan(PlanCycle()); }
  void RunToEnd();

  const Dataset& dataset() const { return dataset_; }
  const RunConfig& config() const { return config_; }
  const MeasurementStore& store() const { return store_; }
  const std::vector<Participant>& participants() const { return participants_; }
  const std::vector<double>& weights() const { return weights_.w; }
  const std::vector<CycleTrace>& traces() const { return traces_; }
  const std::vector<AllocationPlan>& plans() const { return plans_; }
  const ErrorNormalization& normalization() const { return normalization_; }
  const InferenceStrategy& strategy() const { return strategy_; }
  double distance_floor_km() const { return nts_.d_floor_km; }
  std::vector<std::string> warnings() const { return warnings_; }

  // Error accumulated cycle by cycle over the evaluated cycles run so far.
  double StreamingEpsilon() const;
  // Error recomputed from the IS and RS matrices.
  double Epsilon() const;
  // Average cost over evaluated cycles.
  double Phi() const;

  static bool LearnsWeights(Scheme scheme) {
    return scheme == Scheme::kQcoTa || scheme == Scheme::kOoMta;
  }

 private:
  std::vector<PriorityScores> Priorities() const;
  void UpdateWeights();

  Dataset dataset_;
  RunConfig config_;
  InferenceStrategy strategy_;
  SpeParams spe_;
  NtsParams nts_;
  CostModel cost_;
  MeasurementStore store_;
  ErrorNormalization normalization_;
  std::vector<Participant> participants_;
  AttributeWeights weights_;
  LossNormalizer loss_normalizer_;
  std::vector<double> last_losses_;
  std::mt19937_64 bootstrap_rng_;
  std::mt19937_64 scheme_rng_;
  int cycle_ = 0;
  int pending_sweeps_ = 0;
  std::vector<double> error_sums_;
  std::vector<CycleTrace> traces_;
  std::vector<AllocationPlan> plans_;
  std::vector<std::string> warnings_;
};

// First cycle counted by the metrics; cycle 0 is the shared random bootstrap.
inline constexpr int kFirstEvaluatedCycle = 1;

struct RunResult {
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  double phi = 0.0;
  std::vector<CycleTrace> traces;
  std::vector<double> normalization_range;
};

RunResult RunSimulation(const Dataset& dataset, const RunConfig& config);

struct ReportRow {
  Scheme scheme = Scheme::kQcoTa;
  InferenceKind inference = InferenceKind::kKnn;
  int participants = 0;
  int attributes = 0;
  std::uint64_t seed = 0;
  int repeats = 0;
  double epsilon = 0.0;
  double phi = 0.0;
  double epsilon_sd = 0.0;
  double phi_sd = 0.0;
  std::vector<double> epsilon_per_repeat;
  std::vector<double> phi_per_repeat;
};

struct ExperimentReport {
  std::vector<std::string> attribute_names;
  std::vector<ReportRow> rows;
  // Per row, per repeat; empty unless traces were kept.
  std::vector<std::vector<RunResult>> runs;
};

// Runs `repeats` independent repeats (seed of repeat r = RepeatSeed(seed, r))
// and aggregates mean and sample sd. Config errors surface before any cycle.
ExperimentReport RunExperiment(const RunConfig& config, const Dataset& dataset,
                               int repeats, bool keep_traces = true);

// Every (scheme, inference, P, attribute count) of the grid, in that nesting
// order, each with the sweep's seed.
ExperimentReport RunSweep(const SweepConfig& sweep, const Dataset& dataset,
                          bool keep_traces = false);

}  // namespace qcota

#endif  // QCOTA_SIMULATION_H_
