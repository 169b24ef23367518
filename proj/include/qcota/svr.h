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

// Epsilon-insensitive support vector regression with an RBF kernel, trained
// by sequential minimal optimization on the dual (second-order working set
// selection, as in LIBSVM).

#ifndef QCOTA_SVR_H_
#define QCOTA_SVR_H_

#include <array>
#include <span>
#include <vector>

namespace qcota {

struct SvrParams {
  double c = 10.0;
  double epsilon = 0.1;
  // RBF width sigma in km; <= 0 selects the median pairwise distance of the
  // training points.
  double rbf_width_km = 0.0;
  // KKT violation tolerance for stopping.
  double tolerance = 1e-3;
  int max_iterations = 100000;
};

using Point2 = std::array<double, 2>;

class SvrModel {
 public:
  // Throws DomainError if inputs are empty or of different lengths.
  static SvrModel Fit(std::span<const Point2> points,
                      std::span<const double> targets, const SvrParams& params);

  double Predict(const Point2& point) const;

  // coefficients()[i] = alpha_i - alpha*_i.
  const std::vector<double>& coefficients() const { return coefficients_; }
  double bias() const { return bias_; }
  double width_km() const { return width_km_; }
  int iterations() const { return iterations_; }
  // Dual objective 0.5 b'Kb + eps*|b|_1 - y'b at the solution.
  double dual_objective() const { return dual_objective_; }

 private:
  std::vector<Point2> points_;
  std::vector<double> coefficients_;
  double bias_ = 0.0;
  double width_km_ = 1.0;
  int iterations_ = 0;
  double dual_objective_ = 0.0;
};

double RbfKernel(const Point2& u, const Point2& v, double width_km);

// Median of all pairwise distances; 1.0 when it would be zero.
double MedianPairwiseDistance(std::span<const Point2> points);

}  // namespace qcota

#endif  // QCOTA_SVR_H_
