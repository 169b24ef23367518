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

// Domain model shared by every allocator: sensing cells and their geometry,
// the RS/CS/IS measurement cube, participants and allocation plans.

#ifndef QCOTA_CORE_H_
#define QCOTA_CORE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace qcota {

using CellId = int;

struct Cell {
  CellId id = 0;
  double x_km = 0.0;
  double y_km = 0.0;
};

// Cells with projected kilometer coordinates. Pairwise Euclidean distances
// are precomputed; ids are exactly 0..X-1.
class GridGeometry {
 public:
  GridGeometry() = default;
  // Cells may arrive in any order; they are stored sorted by id. Throws
  // DomainError on duplicate, missing or negative ids or non-finite
  // coordinates.
  explicit GridGeometry(std::vector<Cell> cells);

  int num_cells() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(CellId id) const;

  // Throws DomainError for an invalid id.
  double Distance(CellId i, CellId j) const;

  // Smallest strictly positive pairwise distance; 0 when no such pair.
  double MinNonzeroDistance() const;

  bool IsValid(CellId id) const { return id >= 0 && id < num_cells(); }

 private:
  std::vector<Cell> cells_;
  std::vector<double> distances_;
};

double Distance(const GridGeometry& geom, CellId i, CellId j);

// Cost is proportional to the distance travelled.
struct CostModel {
  double cost_per_km = 1.0;
};

double TravelCost(const CostModel& model, const GridGeometry& geom,
                  CellId from, CellId to);

// Dense real cube indexed [attribute][cell][cycle]. A cell's time series is
// contiguous.
class ValueCube {
 public:
  ValueCube() = default;
  ValueCube(int attributes, int cells, int cycles, double fill = 0.0);

  int attributes() const { return attributes_; }
  int cells() const { return cells_; }
  int cycles() const { return cycles_; }

  double& at(int a, int x, int y) { return data_[Index(a, x, y)]; }
  double at(int a, int x, int y) const { return data_[Index(a, x, y)]; }

  std::span<const double> Series(int a, int x) const {
    return {data_.data() + Index(a, x, 0), static_cast<std::size_t>(cycles_)};
  }
  std::span<double> Series(int a, int x) {
    return {data_.data() + Index(a, x, 0), static_cast<std::size_t>(cycles_)};
  }

  bool operator==(const ValueCube&) const = default;

 private:
  std::size_t Index(int a, int x, int y) const {
    return (static_cast<std::size_t>(a) * cells_ + x) * cycles_ + y;
  }

  int attributes_ = 0;
  int cells_ = 0;
  int cycles_ = 0;
  std::vector<double> data_;
};

// Real (RS), collected (CS) and inferred (IS) sensing values. Collection is
// noiseless, so a present CS entry always equals RS.
class MeasurementStore {
 public:
  MeasurementStore() = default;
  explicit MeasurementStore(ValueCube truth);

  int num_attributes() const { return truth_.attributes(); }
  int num_cells() const { return truth_.cells(); }
  int num_cycles() const { return truth_.cycles(); }

  double real(int a, int x, int y) const { return truth_.at(a, x, y); }
  const ValueCube& truth() const { return truth_; }

  std::optional<double> collected(int a, int x, int y) const;
  bool is_collected(int a, int x, int y) const {
    return collected_mask_[MaskIndex(a, x, y)] != 0;
  }
  void MarkCollected(int a, int x, int y);

  // Cells collected for attribute `a` at cycle `y`, ascending.
  std::vector<CellId> CollectedCells(int a, int y) const;

  double inferred(int a, int x, int y) const { return inferred_.at(a, x, y); }
  bool has_inferred(int y) const { return inferred_ready_[y] != 0; }
  // Sets IS[a][*][y]; the cycle counts as inferred once every attribute has
  // been written.
  void SetInferredRow(int a, int y, std::span<const double> row);
  std::vector<double> InferredRow(int a, int y) const;
  // IS[a][x][0..length-1].
  std::span<const double> InferredHistory(int a, int x, int length) const;

 private:
  std::size_t MaskIndex(int a, int x, int y) const {
    return (static_cast<std::size_t>(a) * num_cells() + x) * num_cycles() + y;
  }

  ValueCube truth_;
  ValueCube inferred_;
  std::vector<unsigned char> collected_mask_;
  std::vector<unsigned char> inferred_rows_;  // [attribute][cycle]
  std::vector<unsigned char> inferred_ready_;  // [cycle]
};

struct Participant {
  int id = 0;
  CellId current_cell = 0;
};

struct Assignment {
  int participant_id = 0;
  CellId from_cell = 0;
  CellId to_cell = 0;
};

// One cycle's allocation. `selected_cells` keeps the order in which the
// allocator chose them.
struct AllocationPlan {
  int cycle = 0;
  std::vector<Assignment> assignments;
  std::vector<CellId> selected_cells;
};

// Throws DomainError unless the plan has at most `max_cells` distinct valid
// cells and every participant appears at most once.
void ValidatePlan(const AllocationPlan& plan, const GridGeometry& geom,
                  int max_cells);

// Cell ids ordered by descending score; equal scores keep the lower id first.
std::vector<CellId> RankDescending(std::span<const double> scores);

// Walks `ordered_cells` in order and gives each cell the nearest participant
// not yet assigned (distance ties go to the lower participant id). Every
// allocator uses this rule so cost differences come from the cell choice.
AllocationPlan MatchNearestFirst(int cycle,
                                 std::span<const CellId> ordered_cells,
                                 std::span<const Participant> participants,
                                 const GridGeometry& geom);

// Copies RS into CS for every attribute at each selected cell of the plan's
// cycle and moves participants to their assigned cells. Re-collecting an
// entry is a no-op.
void Collect(MeasurementStore& store, const AllocationPlan& plan,
             std::vector<Participant>& participants);

// Mean travel cost over `num_participants` participants; anyone without an
// assignment stayed put and contributes 0.
double PlanCost(const AllocationPlan& plan, const CostModel& model,
                const GridGeometry& geom, int num_participants);

}  // namespace qcota

#endif  // QCOTA_CORE_H_
