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

// Multi-attribute priority integration: attribute-weighted unified priority
// and the exponentially weighted online update of the attribute weights from
// estimated inference losses.

#ifndef QCOTA_MPI_H_
#define QCOTA_MPI_H_

#include <span>
#include <vector>

#include "qcota/spe.h"

namespace qcota {

// Normalized attribute weights; every entry > 0 and they sum to 1.
struct AttributeWeights {
  std::vector<double> w;
  int cycle = 0;

  static AttributeWeights Uniform(int attributes);
};

struct UnifiedScores {
  int cycle = 0;
  std::vector<double> ups;
};

// UPS[x] = sum_a w[a] * PS[a][x]. Throws DomainError on length mismatch.
UnifiedScores UnifiedPriority(std::span<const PriorityScores> per_attribute,
                              std::span<const double> weights);

// Standard normal quantile.
double NormalQuantile(double p);

// delta-quantile of a normal fitted to |collected - inferred| over paired
// entries (sample mean and n-1 sample sd; sd 0 for one residual), clamped
// at 0. Throws DomainError on empty or mismatched input.
double EstimateLoss(std::span<const double> inferred,
                    std::span<const double> collected, double delta);

struct WeightUpdate {
  std::vector<double> weights;
  // Every product underflowed and the weights were reset to uniform.
  bool reset_to_uniform = false;
};

// w'[a] = w[a] exp(-eta loss[a]) renormalized to sum 1.
WeightUpdate UpdateWeights(std::span<const double> weights,
                           std::span<const double> losses, double eta);

// Rescales each attribute's loss by the running min-max of its own past
// losses, so attributes in different units share one learning rate.
class LossNormalizer {
 public:
  explicit LossNormalizer(int attributes = 0);

  // Folds `loss` into attribute a's running range and returns it mapped to
  // [0, 1] (0 while the range is still degenerate).
  double Normalize(int attribute, double loss);

 private:
  std::vector<double> min_;
  std::vector<double> max_;
  std::vector<bool> seen_;
};

}  // namespace qcota

#endif  // QCOTA_MPI_H_
