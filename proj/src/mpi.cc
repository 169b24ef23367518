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

#include "qcota/mpi.h"

#include <cmath>
#include <limits>

#include <boost/math/distributions/normal.hpp>

#include "qcota/errors.h"

namespace qcota {

AttributeWeights AttributeWeights::Uniform(int attributes) {
  if (attributes < 1) throw DomainError("need at least one attribute");
  return {std::vector<double>(attributes, 1.0 / attributes), 0};
}

UnifiedScores UnifiedPriority(std::span<const PriorityScores> per_attribute,
                              std::span<const double> weights) {
  if (per_attribute.empty() || per_attribute.size() != weights.size()) {
    throw DomainError("need one weight per attribute priority vector");
  }
  const std::size_t num_cells = per_attribute.front().ps.size();
  UnifiedScores out;
  out.cycle = per_attribute.front().cycle;
  out.ups.assign(num_cells, 0.0);
  for (std::size_t a = 0; a < per_attribute.size(); ++a) {
    if (per_attribute[a].ps.size() != num_cells) {
      throw DomainError("priority vectors differ in length");
    }
    for (std::size_t x = 0; x < num_cells; ++x) {
      out.ups[x] += weights[a] * per_attribute[a].ps[x];
    }
  }
  return out;
}

double NormalQuantile(double p) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double EstimateLoss(std::span<const double> inferred,
                    std::span<const double> collected, double delta) {
  if (inferred.empty() || inferred.size() != collected.size()) {
    throw DomainError("loss needs paired, non-empty inferred/collected values");
  }
  const std::size_t n = inferred.size();
  std::vector<double> residual(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    residual[i] = std::abs(collected[i] - inferred[i]);
    mean += residual[i];
  }
  mean /= static_cast<double>(n);
  double sd = 0.0;
  if (n >= 2) {
    for (double r : residual) sd += (r - mean) * (r - mean);
    sd = std::sqrt(sd / static_cast<double>(n - 1));
  }
  const double loss = sd > 0.0 ? mean + sd * NormalQuantile(delta) : mean;
  return std::max(loss, 0.0);
}

WeightUpdate UpdateWeights(std::span<const double> weights,
                           std::span<const double> losses, double eta) {
  if (weights.empty() || weights.size() != losses.size()) {
    throw DomainError("need one loss per attribute weight");
  }
  WeightUpdate out;
  out.weights.resize(weights.size());
  double total = 0.0;
  for (std::size_t a = 0; a < weights.size(); ++a) {
    if (!std::isfinite(losses[a]) || losses[a] < 0.0) {
      throw DomainError("losses must be finite and non-negative");
    }
    out.weights[a] = weights[a] * std::exp(-eta * losses[a]);
    total += out.weights[a];
  }
  bool degenerate = !(total > 0.0) || !std::isfinite(total);
  for (double w : out.weights) degenerate = degenerate || !(w > 0.0);
  if (degenerate) {
    out.weights.assign(weights.size(), 1.0 / static_cast<double>(weights.size()));
    out.reset_to_uniform = true;
    return out;
  }
  for (double& w : out.weights) w /= total;
  return out;
}

LossNormalizer::LossNormalizer(int attributes)
    : min_(attributes, 0.0), max_(attributes, 0.0), seen_(attributes, false) {}

double LossNormalizer::Normalize(int attribute, double loss) {
  if (!seen_[attribute]) {
    min_[attribute] = max_[attribute] = loss;
    seen_[attribute] = true;
  } else {
    min_[attribute] = std::min(min_[attribute], loss);
    max_[attribute] = std::max(max_[attribute], loss);
  }
  const double range = max_[attribute] - min_[attribute];
  if (range <= 0.0) return 0.0;
  return (loss - min_[attribute]) / range;
}

}  // namespace qcota
