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

// Comparison allocators. All of them hand their chosen cells to the same
// nearest-first participant matching as QCO-TA.

#ifndef QCOTA_BASELINES_H_
#define QCOTA_BASELINES_H_

#include <random>
#include <span>

#include "qcota/core.h"
#include "qcota/mpi.h"
#include "qcota/spe.h"

namespace qcota {

// Top-P cells by unified priority; no cost term.
AllocationPlan AllocateOoMta(const UnifiedScores& ups,
                             std::span<const Participant> participants,
                             const GridGeometry& geom);

// d = floor(P / A) cells per attribute, taken from each attribute's ranking
// in attribute order while skipping cells already chosen. The P - A*d
// leftover slots continue the per-attribute lists round-robin. Throws
// ConfigError if P < A.
AllocationPlan AllocateGpsTa(std::span<const PriorityScores> per_attribute,
                             std::span<const Participant> participants,
                             const GridGeometry& geom);

// Top-P cells by the per-cell mean priority across attributes.
AllocationPlan AllocateEwaTa(std::span<const PriorityScores> per_attribute,
                             std::span<const Participant> participants,
                             const GridGeometry& geom);

// P distinct cells drawn uniformly without replacement, matched in draw
// order.
AllocationPlan AllocateUnsTa(std::mt19937_64& rng, int cycle,
                             std::span<const Participant> participants,
                             const GridGeometry& geom);

}  // namespace qcota

#endif  // QCOTA_BASELINES_H_
