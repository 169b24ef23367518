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

// Nonuniform-cost-aware task selection. Cells are MDP states, moving between
// cells is an action, and synchronous value iteration turns the unified
// priority plus a distance reward into the ranking score QRS.

#ifndef QCOTA_NTS_H_
#define QCOTA_NTS_H_

#include <span>
#include <vector>

#include "qcota/core.h"

namespace qcota {

inline constexpr int kMaxValueIterationSweeps = 10000;

struct NtsParams {
  double gamma = 1.0;
  double beta = 0.5;
  double theta_conv = 1e-4;
  double d_floor_km = 1.0;
  // Reward gamma / distance only, without the destination UPS term.
  bool literal_bellman = false;
};

// Half the smallest nonzero pairwise distance (1 km if all cells coincide).
double DefaultDistanceFloor(const GridGeometry& geom);

// ups_dest + gamma / max(dist_km, d_floor_km).
double Reward(double ups_dest, double dist_km, double gamma, double d_floor_km);

struct Mdp {
  int num_states = 0;
  std::vector<double> initial_values;  // UPS
  std::vector<double> rewards;         // [from * X + to]
  double beta = 0.5;
  double theta_conv = 1e-4;

  double reward(int from, int to) const { return rewards[from * num_states + to]; }
};

Mdp BuildMdp(std::span<const double> ups, const GridGeometry& geom,
             const NtsParams& params);

struct QrsRanking {
  int cycle = 0;
  std::vector<double> qrs;
  // UPS the iteration started from; breaks exact QRS ties.
  std::vector<double> ups;
  int sweeps = 0;
  // Max per-state change of each sweep.
  std::vector<double> sweep_deltas;
};

// V[s] <- max_t (beta V[t] + R[s][t]) over all states, synchronously, from
// V = initial_values until the largest change drops below theta_conv.
// Throws ConvergenceError after kMaxValueIterationSweeps sweeps.
QrsRanking ValueIteration(const Mdp& mdp);

// Top-P cells by QRS, matched nearest-first. Exact QRS ties go to the higher
// UPS, then to the lower cell id.
AllocationPlan AssignTasks(const QrsRanking& ranking,
                           std::span<const Participant> participants,
                           const GridGeometry& geom);

}  // namespace qcota

#endif  // QCOTA_NTS_H_
