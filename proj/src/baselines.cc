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

#include "qcota/baselines.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "qcota/errors.h"

namespace qcota {
namespace {

void RequireFewerThanCells(std::span<const Participant> participants,
                           const GridGeometry& geom) {
  if (participants.size() >= static_cast<std::size_t>(geom.num_cells())) {
    throw DomainError("allocation needs fewer participants than cells");
  }
}

AllocationPlan TopP(int cycle, std::span<const double> scores,
                    std::span<const Participant> participants,
                    const GridGeometry& geom) {
  RequireFewerThanCells(participants, geom);
  std::vector<CellId> order = RankDescending(scores);
  order.resize(participants.size());
  return MatchNearestFirst(cycle, order, participants, geom);
}

}  // namespace

AllocationPlan AllocateOoMta(const UnifiedScores& ups,
                             std::span<const Participant> participants,
                             const GridGeometry& geom) {
  return TopP(ups.cycle, ups.ups, participants, geom);
}

AllocationPlan AllocateGpsTa(std::span<const PriorityScores> per_attribute,
                             std::span<const Participant> participants,
                             const GridGeometry& geom) {
  RequireFewerThanCells(participants, geom);
  const int num_a = static_cast<int>(per_attribute.size());
  const int p = static_cast<int>(participants.size());
  if (num_a < 1 || p < num_a) {
    throw ConfigError("GPS-TA needs at least as many participants as attributes");
  }
  const int per_attribute_quota = p / num_a;
  std::vector<std::vector<CellId>> rankings;
  for (const PriorityScores& ps : per_attribute) rankings.push_back(RankDescending(ps.ps));
  std::vector<std::size_t> cursor(num_a, 0);
  std::vector<bool> chosen(geom.num_cells(), false);
  std::vector<CellId> selection;

  auto take_next = [&](int a) {
    while (cursor[a] < rankings[a].size()) {
      const CellId c = rankings[a][cursor[a]++];
      if (!chosen[c]) {
        chosen[c] = true;
        selection.push_back(c);
        return true;
      }
    }
    return false;
  };

  for (int a = 0; a < num_a; ++a) {
    for (int i = 0; i < per_attribute_quota; ++i) take_next(a);
  }
  for (int a = 0; static_cast<int>(selection.size()) < p; a = (a + 1) % num_a) {
    take_next(a);
  }
  return MatchNearestFirst(per_attribute.front().cycle, selection, participants,
                           geom);
}

AllocationPlan AllocateEwaTa(std::span<const PriorityScores> per_attribute,
                             std::span<const Participant> participants,
                             const GridGeometry& geom) {
  if (per_attribute.empty()) throw DomainError("no priority vectors");
  const std::vector<double> uniform(per_attribute.size(),
                                    1.0 / static_cast<double>(per_attribute.size()));
  const UnifiedScores mean = UnifiedPriority(per_attribute, uniform);
  return TopP(mean.cycle, mean.ups, participants, geom);
}

AllocationPlan AllocateUnsTa(std::mt19937_64& rng, int cycle,
                             std::span<const Participant> participants,
                             const GridGeometry& geom) {
  RequireFewerThanCells(participants, geom);
  std::vector<CellId> cells(geom.num_cells());
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  cells.resize(participants.size());
  return MatchNearestFirst(cycle, cells, participants, geom);
}

}  // namespace qcota
