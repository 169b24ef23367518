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

#include "qcota/simulation.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcota/baselines.h"
#include "qcota/errors.h"

namespace qcota {
namespace {

constexpr std::uint64_t kBootstrapStream = 0x626f6f74;  // "boot"
constexpr std::uint64_t kSchemeStream = 0x736368;       // "sch"

InferenceStrategy StrategyFor(const RunConfig& cfg) {
  InferenceStrategy s;
  s.kind = cfg.inference;
  s.k = cfg.hyperparameters.k_knn;
  s.n = cfg.hyperparameters.n_idw;
  return s;
}

double Mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double SampleSd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = Mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace

std::uint64_t MixSeed(std::uint64_t value) {
  std::uint64_t z = value + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t RepeatSeed(std::uint64_t base, int repeat) {
  return MixSeed(base + static_cast<std::uint64_t>(repeat));
}

Simulation::Simulation(const Dataset& dataset, const RunConfig& config)
    : config_(config) {
  ValidateRunConfigFor(config, dataset);
  ValidateDataset(dataset);
  dataset_ = SelectAttributes(
      dataset, ResolvedAttributes(config, dataset.num_attributes()));
  const Hyperparameters& hp = config.hyperparameters;
  strategy_ = StrategyFor(config);
  spe_.alpha_te = hp.alpha_te;
  spe_.alpha_smi = hp.alpha_smi;
  spe_.window = hp.entropy_window;
  spe_.normalize = !hp.raw_priority_scale;
  nts_.gamma = hp.gamma;
  nts_.beta = hp.beta;
  nts_.theta_conv = hp.theta_conv;
  nts_.d_floor_km = hp.d_floor_km ? *hp.d_floor_km
                                  : DefaultDistanceFloor(dataset_.geometry);
  nts_.literal_bellman = config.literal_bellman;
  cost_.cost_per_km = hp.cost_per_km;

  store_ = MeasurementStore(dataset_.truth);
  normalization_ = ComputeNormalization(store_, kFirstEvaluatedCycle,
                                        dataset_.num_cycles());
  warnings_ = normalization_.warnings;
  const int num_a = dataset_.num_attributes();
  weights_ = AttributeWeights::Uniform(num_a);
  loss_normalizer_ = LossNormalizer(num_a);
  last_losses_.assign(num_a, 0.0);
  error_sums_.assign(num_a, 0.0);

  bootstrap_rng_.seed(MixSeed(config.seed ^ kBootstrapStream));
  scheme_rng_.seed(MixSeed(config.seed ^ kSchemeStream));
  std::uniform_int_distribution<int> any_cell(0, dataset_.num_cells() - 1);
  for (int p = 0; p < config.participants; ++p) {
    participants_.push_back({p, any_cell(bootstrap_rng_)});
  }
}

std::vector<PriorityScores> Simulation::Priorities() const {
  std::vector<PriorityScores> out;
  for (int a = 0; a < dataset_.num_attributes(); ++a) {
    out.push_back(ComputePriorities(store_, a, cycle_, spe_));
  }
  return out;
}

AllocationPlan Simulation::PlanCycle() {
  if (done()) throw DomainError("simulation already finished");
  pending_sweeps_ = 0;
  const GridGeometry& geom = dataset_.geometry;
  if (cycle_ == 0) {
    return AllocateUnsTa(bootstrap_rng_, 0, participants_, geom);
  }
  switch (config_.scheme) {
    case Scheme::kUnsTa:
      return AllocateUnsTa(scheme_rng_, cycle_, participants_, geom);
    case Scheme::kGpsTa:
      return AllocateGpsTa(Priorities(), participants_, geom);
    case Scheme::kEwaTa:
      return AllocateEwaTa(Priorities(), participants_, geom);
    case Scheme::kOoMta:
      return AllocateOoMta(UnifiedPriority(Priorities(), weights_.w),
                           participants_, geom);
    case Scheme::kQcoTa: {
      const UnifiedScores ups = UnifiedPriority(Priorities(), weights_.w);
      QrsRanking ranking = ValueIteration(BuildMdp(ups.ups, geom, nts_));
      ranking.cycle = cycle_;
      pending_sweeps_ = ranking.sweeps;
      return AssignTasks(ranking, participants_, geom);
    }
  }
  throw DomainError("unknown scheme");
}

void Simulation::UpdateWeights() {
  const int num_a = dataset_.num_attributes();
  std::vector<double> normalized(num_a);
  for (int a = 0; a < num_a; ++a) {
    std::vector<Sample> samples;
    for (CellId x : store_.CollectedCells(a, cycle_)) {
      samples.push_back({x, store_.real(a, x, cycle_)});
    }
    if (samples.size() >= 2) {
      const std::vector<double> loo =
          LeaveOneOutPredictions(strategy_, samples, dataset_.geometry);
      std::vector<double> collected;
      for (const Sample& s : samples) collected.push_back(s.value);
      last_losses_[a] = EstimateLoss(loo, collected, config_.hyperparameters.delta);
    }
    normalized[a] = loss_normalizer_.Normalize(a, last_losses_[a]);
  }
  const WeightUpdate update =
      qcota::UpdateWeights(weights_.w, normalized, config_.hyperparameters.eta);
  if (update.reset_to_uniform) {
    warnings_.push_back("cycle " + std::to_string(cycle_) +
                        ": attribute weights underflowed; reset to uniform");
  }
  weights_.w = update.weights;
  weights_.cycle = cycle_ + 1;
  traces_.back().losses = last_losses_;
  traces_.back().normalized_losses = normalized;
}

void Simulation::ExecutePlan(const AllocationPlan& plan) {
  if (done()) throw DomainError("simulation already finished");
  if (plan.cycle != cycle_) throw DomainError("plan is for a different cycle");
  ValidatePlan(plan, dataset_.geometry, config_.participants);
  const GridGeometry& geom = dataset_.geometry;

  CycleTrace trace;
  trace.cycle = cycle_;
  trace.bootstrap = cycle_ == 0;
  trace.selected_cells = plan.selected_cells;
  trace.assignments = plan.assignments;
  trace.weights = weights_.w;
  trace.mean_cost = PlanCost(plan, cost_, geom, config_.participants);
  trace.value_iteration_sweeps = pending_sweeps_;
  pending_sweeps_ = 0;

  Collect(store_, plan, participants_);
  for (int a = 0; a < dataset_.num_attributes(); ++a) {
    std::vector<double> previous;
    if (cycle_ > 0) previous = store_.InferredRow(a, cycle_ - 1);
    const std::vector<double> row =
        InferCycle(strategy_, store_, geom, cycle_, a,
                   cycle_ > 0 ? std::optional<std::span<const double>>(previous)
                              : std::nullopt);
    store_.SetInferredRow(a, cycle_, row);
  }
  trace.normalized_error = CycleNormalizedError(store_, cycle_, normalization_);
  if (cycle_ >= kFirstEvaluatedCycle) {
    for (int a = 0; a < dataset_.num_attributes(); ++a) {
      double sum = 0.0;
      for (int x = 0; x < dataset_.num_cells(); ++x) {
        sum += SensingError(store_.inferred(a, x, cycle_), store_.real(a, x, cycle_));
      }
      error_sums_[a] += sum / dataset_.num_cells();
    }
  }
  traces_.push_back(std::move(trace));
  plans_.push_back(plan);
  if (LearnsWeights(config_.scheme)) UpdateWeights();
  ++cycle_;
}

void Simulation::RunToEnd() {
  while (!done()) RunCycle();
}

double Simulation::StreamingEpsilon() const {
  const int evaluated = cycle_ - kFirstEvaluatedCycle;
  if (evaluated <= 0) return 0.0;
  double total = 0.0;
  for (std::size_t a = 0; a < error_sums_.size(); ++a) {
    total += normalization_.Apply(static_cast<int>(a), error_sums_[a] / evaluated);
  }
  return total;
}

double Simulation::Epsilon() const {
  if (cycle_ <= kFirstEvaluatedCycle) return 0.0;
  return AggregatedSensingError(store_, kFirstEvaluatedCycle, cycle_,
                                normalization_);
}

double Simulation::Phi() const {
  if (plans_.size() <= kFirstEvaluatedCycle) return 0.0;
  return AverageCost(std::span(plans_).subspan(kFirstEvaluatedCycle), cost_,
                     dataset_.geometry, config_.participants);
}

RunResult RunSimulation(const Dataset& dataset, const RunConfig& config) {
  Simulation sim(dataset, config);
  sim.RunToEnd();
  RunResult out;
  out.seed = config.seed;
  out.epsilon = sim.Epsilon();
  out.phi = sim.Phi();
  out.traces = sim.traces();
  out.normalization_range = sim.normalization().range;
  return out;
}

ExperimentReport RunExperiment(const RunConfig& config, const Dataset& dataset,
                               int repeats, bool keep_traces) {
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  ValidateRunConfigFor(config, dataset);
  ValidateDataset(dataset);
  const std::vector<int> attrs =
      ResolvedAttributes(config, dataset.num_attributes());
  ExperimentReport report;
  for (int a : attrs) report.attribute_names.push_back(dataset.attribute_names[a]);
  ReportRow row;
  row.scheme = config.scheme;
  row.inference = config.inference;
  row.participants = config.participants;
  row.attributes = static_cast<int>(attrs.size());
  row.seed = config.seed;
  row.repeats = repeats;
  std::vector<RunResult> runs;
  for (int r = 0; r < repeats; ++r) {
    RunConfig cfg = config;
    cfg.seed = RepeatSeed(config.seed, r);
    RunResult result = RunSimulation(dataset, cfg);
    row.epsilon_per_repeat.push_back(result.epsilon);
    row.phi_per_repeat.push_back(result.phi);
    if (keep_traces) runs.push_back(std::move(result));
  }
  row.epsilon = Mean(row.epsilon_per_repeat);
  row.phi = Mean(row.phi_per_repeat);
  row.epsilon_sd = SampleSd(row.epsilon_per_repeat);
  row.phi_sd = SampleSd(row.phi_per_repeat);
  report.rows.push_back(std::move(row));
  if (keep_traces) report.runs.push_back(std::move(runs));
  return report;
}

ExperimentReport RunSweep(const SweepConfig& sweep, const Dataset& dataset,
                          bool keep_traces) {
  std::vector<RunConfig> configs;
  for (Scheme scheme : sweep.schemes) {
    for (InferenceKind inference : sweep.inferences) {
      for (int p : sweep.participants) {
        for (int n : sweep.attribute_counts) {
          RunConfig cfg;
          cfg.scheme = scheme;
          cfg.inference = inference;
          cfg.participants = p;
          for (int a = 0; a < n; ++a) cfg.attributes_used.push_back(a);
          cfg.hyperparameters = sweep.hyperparameters;
          cfg.seed = sweep.seed;
          cfg.literal_bellman = sweep.literal_bellman;
          ValidateRunConfigFor(cfg, dataset);
          configs.push_back(std::move(cfg));
        }
      }
    }
  }
  ExperimentReport report;
  report.attribute_names = dataset.attribute_names;
  for (const RunConfig& cfg : configs) {
    ExperimentReport one = RunExperiment(cfg, dataset, sweep.repeats, keep_traces);
    report.rows.push_back(std::move(one.rows.front()));
    if (keep_traces) report.runs.push_back(std::move(one.runs.front()));
  }
  return report;
}

}  // namespace qcota
