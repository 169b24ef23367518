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

#include "qcota/nts.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qcota/errors.h"

namespace qcota {

double DefaultDistanceFloor(const GridGeometry& geom) {
  const double d = geom.MinNonzeroDistance();
  return d > 0.0 ? 0.5 * d : 1.0;
}

double Reward(double ups_dest, double dist_km, double gamma, double d_floor_km) {
  if (dist_km < 0.0) throw DomainError("negative distance in reward");
  return ups_dest + gamma / std::max(dist_km, d_floor_km);
}

Mdp BuildMdp(std::span<const double> ups, const GridGeometry& geom,
             const NtsParams& params) {
  const int n = geom.num_cells();
  if (static_cast<int>(ups.size()) != n) {
    throw DomainError("UPS length does not match the cell count");
  }
  if (!(params.beta > 0.0 && params.beta < 1.0)) {
    throw DomainError("discount beta must lie in (0, 1)");
  }
  if (!(params.d_floor_km > 0.0)) throw DomainError("d_floor_km must be > 0");
  Mdp mdp;
  mdp.num_states = n;
  mdp.initial_values.assign(ups.begin(), ups.end());
  mdp.beta = params.beta;
  mdp.theta_conv = params.theta_conv;
  mdp.rewards.resize(static_cast<std::size_t>(n) * n);
  for (int from = 0; from < n; ++from) {
    for (int to = 0; to < n; ++to) {
      const double quality = params.literal_bellman ? 0.0 : ups[to];
      mdp.rewards[from * n + to] = Reward(quality, geom.Distance(from, to),
                                          params.gamma, params.d_floor_km);
    }
  }
  return mdp;
}

QrsRanking ValueIteration(const Mdp& mdp) {
  const int n = mdp.num_states;
  QrsRanking out;
  out.ups = mdp.initial_values;
  std::vector<double> v = mdp.initial_values;
  std::vector<double> next(n);
  for (int sweep = 1; sweep <= kMaxValueIterationSweeps; ++sweep) {
    double delta = 0.0;
    for (int s = 0; s < n; ++s) {
      double best = -std::numeric_limits<double>::infinity();
      for (int t = 0; t < n; ++t) {
        best = std::max(best, mdp.beta * v[t] + mdp.reward(s, t));
      }
      next[s] = best;
      delta = std::max(delta, std::abs(best - v[s]));
    }
    v.swap(next);
    out.sweep_deltas.push_back(delta);
    if (delta < mdp.theta_conv) {
      out.sweeps = sweep;
      out.qrs = std::move(v);
      return out;
    }
  }
  throw ConvergenceError("value iteration did not converge in " +
                         std::to_string(kMaxValueIterationSweeps) + " sweeps");
}

AllocationPlan AssignTasks(const QrsRanking& ranking,
                           std::span<const Participant> participants,
                           const GridGeometry& geom) {
  const int p = static_cast<int>(participants.size());
  if (p >= geom.num_cells()) {
    throw DomainError("assignment needs fewer participants than cells");
  }
  std::vector<CellId> order(geom.num_cells());
  std::iota(order.begin(), order.end(), 0);
  const bool has_ups = ranking.ups.size() == ranking.qrs.size();
  std::stable_sort(order.begin(), order.end(), [&](CellId l, CellId r) {
    if (ranking.qrs[l] != ranking.qrs[r]) return ranking.qrs[l] > ranking.qrs[r];
    return has_ups && ranking.ups[l] > ranking.ups[r];
  });
  order.resize(p);
  return MatchNearestFirst(ranking.cycle, order, participants, geom);
}

}  // namespace qcota
