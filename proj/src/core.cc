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

#include "qcota/core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qcota/errors.h"

namespace qcota {

GridGeometry::GridGeometry(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(),
            [](const Cell& l, const Cell& r) { return l.id < r.id; });
  for (int i = 0; i < num_cells(); ++i) {
    if (cells_[i].id != i) {
      throw DomainError("cell ids must be exactly 0..X-1; found id " +
                        std::to_string(cells_[i].id) + " at position " +
                        std::to_string(i));
    }
    if (!std::isfinite(cells_[i].x_km) || !std::isfinite(cells_[i].y_km)) {
      throw DomainError("non-finite coordinates for cell " +
                        std::to_string(i));
    }
  }
  const int n = num_cells();
  distances_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = std::hypot(cells_[i].x_km - cells_[j].x_km,
                                  cells_[i].y_km - cells_[j].y_km);
      distances_[static_cast<std::size_t>(i) * n + j] = d;
      distances_[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
}

const Cell& GridGeometry::cell(CellId id) const {
  if (!IsValid(id)) throw DomainError("invalid cell id " + std::to_string(id));
  return cells_[id];
}

double GridGeometry::Distance(CellId i, CellId j) const {
  if (!IsValid(i) || !IsValid(j)) {
    throw DomainError("invalid cell id in distance(" + std::to_string(i) +
                      ", " + std::to_string(j) + ")");
  }
  return distances_[static_cast<std::size_t>(i) * num_cells() + j];
}

double GridGeometry::MinNonzeroDistance() const {
  double best = std::numeric_limits<double>::infinity();
  for (double d : distances_) {
    if (d > 0.0) best = std::min(best, d);
  }
  return std::isfinite(best) ? best : 0.0;
}

double Distance(const GridGeometry& geom, CellId i, CellId j) {
  return geom.Distance(i, j);
}

double TravelCost(const CostModel& model, const GridGeometry& geom,
                  CellId from, CellId to) {
  return model.cost_per_km * geom.Distance(from, to);
}

ValueCube::ValueCube(int attributes, int cells, int cycles, double fill)
    : attributes_(attributes), cells_(cells), cycles_(cycles) {
  if (attributes < 0 || cells < 0 || cycles < 0) {
    throw DomainError("negative ValueCube extent");
  }
  data_.assign(static_cast<std::size_t>(attributes) * cells * cycles, fill);
}

MeasurementStore::MeasurementStore(ValueCube truth)
    : truth_(std::move(truth)),
      inferred_(truth_.attributes(), truth_.cells(), truth_.cycles()),
      collected_mask_(static_cast<std::size_t>(truth_.attributes()) *
                          truth_.cells() * truth_.cycles(),
                      0),
      inferred_rows_(static_cast<std::size_t>(truth_.attributes()) *
                         truth_.cycles(),
                     0),
      inferred_ready_(truth_.cycles(), 0) {}

std::optional<double> MeasurementStore::collected(int a, int x, int y) const {
  if (!is_collected(a, x, y)) return std::nullopt;
  return truth_.at(a, x, y);
}

void MeasurementStore::MarkCollected(int a, int x, int y) {
  if (a < 0 || a >= num_attributes() || x < 0 || x >= num_cells() || y < 0 ||
      y >= num_cycles()) {
    throw DomainError("collect outside the measurement cube");
  }
  collected_mask_[MaskIndex(a, x, y)] = 1;
}

std::vector<CellId> MeasurementStore::CollectedCells(int a, int y) const {
  std::vector<CellId> out;
  for (int x = 0; x < num_cells(); ++x) {
    if (is_collected(a, x, y)) out.push_back(x);
  }
  return out;
}

void MeasurementStore::SetInferredRow(int a, int y, std::span<const double> row) {
  if (static_cast<int>(row.size()) != num_cells()) {
    throw DomainError("inferred row has " + std::to_string(row.size()) +
                      " cells, expected " + std::to_string(num_cells()));
  }
  for (int x = 0; x < num_cells(); ++x) inferred_.at(a, x, y) = row[x];
  inferred_rows_[static_cast<std::size_t>(a) * num_cycles() + y] = 1;
  bool all = true;
  for (int b = 0; b < num_attributes(); ++b) {
    all = all && inferred_rows_[static_cast<std::size_t>(b) * num_cycles() + y];
  }
  inferred_ready_[y] = all ? 1 : 0;
}

std::vector<double> MeasurementStore::InferredRow(int a, int y) const {
  std::vector<double> row(num_cells());
  for (int x = 0; x < num_cells(); ++x) row[x] = inferred_.at(a, x, y);
  return row;
}

std::span<const double> MeasurementStore::InferredHistory(int a, int x,
                                                          int length) const {
  return inferred_.Series(a, x).first(static_cast<std::size_t>(length));
}

void ValidatePlan(const AllocationPlan& plan, const GridGeometry& geom,
                  int max_cells) {
  if (static_cast<int>(plan.selected_cells.size()) > max_cells) {
    throw DomainError("plan selects more cells than participants");
  }
  std::vector<CellId> cells = plan.selected_cells;
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw DomainError("plan selects a cell twice");
  }
  for (CellId c : cells) {
    if (!geom.IsValid(c)) throw DomainError("plan selects an invalid cell");
  }
  std::vector<int> ids;
  for (const Assignment& asg : plan.assignments) ids.push_back(asg.participant_id);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw DomainError("participant assigned twice in one cycle");
  }
}

std::vector<CellId> RankDescending(std::span<const double> scores) {
  std::vector<CellId> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](CellId l, CellId r) {
    return scores[l] > scores[r];
  });
  return order;
}

AllocationPlan MatchNearestFirst(int cycle,
                                 std::span<const CellId> ordered_cells,
                                 std::span<const Participant> participants,
                                 const GridGeometry& geom) {
  if (ordered_cells.size() > participants.size()) {
    throw DomainError("more cells than participants to match");
  }
  AllocationPlan plan;
  plan.cycle = cycle;
  std::vector<bool> taken(participants.size(), false);
  for (CellId cell : ordered_cells) {
    int best = -1;
    double best_distance = 0.0;
    for (std::size_t p = 0; p < participants.size(); ++p) {
      if (taken[p]) continue;
      const double d = geom.Distance(participants[p].current_cell, cell);
      if (best < 0 || d < best_distance ||
          (d == best_distance &&
           participants[p].id < participants[best].id)) {
        best = static_cast<int>(p);
        best_distance = d;
      }
    }
    taken[best] = true;
    plan.assignments.push_back(
        {participants[best].id, participants[best].current_cell, cell});
    plan.selected_cells.push_back(cell);
  }
  return plan;
}

void Collect(MeasurementStore& store, const AllocationPlan& plan,
             std::vector<Participant>& participants) {
  if (plan.cycle < 0 || plan.cycle >= store.num_cycles()) {
    throw DomainError("plan cycle outside the dataset horizon");
  }
  for (CellId x : plan.selected_cells) {
    for (int a = 0; a < store.num_attributes(); ++a) {
      store.MarkCollected(a, x, plan.cycle);
    }
  }
  for (const Assignment& asg : plan.assignments) {
    auto it = std::find_if(participants.begin(), participants.end(),
                           [&](const Participant& p) {
                             return p.id == asg.participant_id;
                           });
    if (it == participants.end()) {
      throw DomainError("plan references unknown participant " +
                        std::to_string(asg.participant_id));
    }
    it->current_cell = asg.to_cell;
  }
}

double PlanCost(const AllocationPlan& plan, const CostModel& model,
                const GridGeometry& geom, int num_participants) {
  if (num_participants <= 0) return 0.0;
  double total = 0.0;
  for (const Assignment& asg : plan.assignments) {
    total += TravelCost(model, geom, asg.from_cell, asg.to_cell);
  }
  return total / num_participants;
}

}  // namespace qcota
