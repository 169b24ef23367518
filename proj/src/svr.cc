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

#include "qcota/svr.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcota/errors.h"

namespace qcota {
namespace {

constexpr double kTau = 1e-12;

}  // namespace

double RbfKernel(const Point2& u, const Point2& v, double width_km) {
  const double dx = u[0] - v[0];
  const double dy = u[1] - v[1];
  return std::exp(-(dx * dx + dy * dy) / (2.0 * width_km * width_km));
}

double MedianPairwiseDistance(std::span<const Point2> points) {
  std::vector<double> d;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      d.push_back(std::hypot(points[i][0] - points[j][0],
                             points[i][1] - points[j][1]));
    }
  }
  if (d.empty()) return 1.0;
  std::sort(d.begin(), d.end());
  const std::size_t n = d.size();
  const double median = n % 2 ? d[n / 2] : 0.5 * (d[n / 2 - 1] + d[n / 2]);
  return median > 0.0 ? median : 1.0;
}

SvrModel SvrModel::Fit(std::span<const Point2> points,
                       std::span<const double> targets,
                       const SvrParams& params) {
  if (points.empty() || points.size() != targets.size()) {
    throw DomainError("SVR needs equally many (>0) points and targets");
  }
  const int l = static_cast<int>(points.size());
  SvrModel model;
  model.points_.assign(points.begin(), points.end());
  model.width_km_ = params.rbf_width_km > 0.0 ? params.rbf_width_km
                                              : MedianPairwiseDistance(points);

  std::vector<double> kernel(static_cast<std::size_t>(l) * l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      kernel[i * l + j] = RbfKernel(points[i], points[j], model.width_km_);
    }
  }
  auto k_at = [&](int i, int j) { return kernel[(i % l) * l + (j % l)]; };

  // 2l variables: t < l is alpha_t (sign +1), t >= l is alpha*_{t-l} (-1).
  const int n = 2 * l;
  const double c = params.c;
  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n);
  std::vector<int> sign(n);
  for (int t = 0; t < l; ++t) {
    sign[t] = 1;
    sign[t + l] = -1;
    grad[t] = params.epsilon - targets[t];
    grad[t + l] = params.epsilon + targets[t];
  }
  auto q = [&](int i, int j) { return sign[i] * sign[j] * k_at(i, j); };
  auto at_upper = [&](int t) { return alpha[t] >= c; };
  auto at_lower = [&](int t) { return alpha[t] <= 0.0; };

  int iter = 0;
  for (; iter < params.max_iterations; ++iter) {
    double gmax = -std::numeric_limits<double>::infinity();
    int gmax_idx = -1;
    for (int t = 0; t < n; ++t) {
      if (sign[t] == 1) {
        if (!at_upper(t) && -grad[t] >= gmax) {
          gmax = -grad[t];
          gmax_idx = t;
        }
      } else if (!at_lower(t) && grad[t] >= gmax) {
        gmax = grad[t];
        gmax_idx = t;
      }
    }
    const int i = gmax_idx;
    double gmax2 = -std::numeric_limits<double>::infinity();
    int gmin_idx = -1;
    double obj_diff_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (sign[j] == 1) {
        if (at_lower(j)) continue;
        const double grad_diff = gmax + grad[j];
        gmax2 = std::max(gmax2, grad[j]);
        if (i >= 0 && grad_diff > 0.0) {
          const double quad = k_at(i, i) + k_at(j, j) - 2.0 * sign[i] * q(i, j);
          const double obj = -(grad_diff * grad_diff) / std::max(quad, kTau);
          if (obj <= obj_diff_min) {
            gmin_idx = j;
            obj_diff_min = obj;
          }
        }
      } else {
        if (at_upper(j)) continue;
        const double grad_diff = gmax - grad[j];
        gmax2 = std::max(gmax2, -grad[j]);
        if (i >= 0 && grad_diff > 0.0) {
          const double quad = k_at(i, i) + k_at(j, j) + 2.0 * sign[i] * q(i, j);
          const double obj = -(grad_diff * grad_diff) / std::max(quad, kTau);
          if (obj <= obj_diff_min) {
            gmin_idx = j;
            obj_diff_min = obj;
          }
        }
      }
    }
    if (i < 0 || gmin_idx < 0 || gmax + gmax2 < params.tolerance) break;
    const int j = gmin_idx;

    const double old_i = alpha[i];
    const double old_j = alpha[j];
    const double qij = q(i, j);
    if (sign[i] != sign[j]) {
      double quad = k_at(i, i) + k_at(j, j) + 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = -diff;
      }
      if (diff > 0.0) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = c - diff;
        }
      } else if (alpha[j] > c) {
        alpha[j] = c;
        alpha[i] = c + diff;
      }
    } else {
      double quad = k_at(i, i) + k_at(j, j) - 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > c) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = sum - c;
        }
      } else if (alpha[j] < 0.0) {
        alpha[j] = 0.0;
        alpha[i] = sum;
      }
      if (sum > c) {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = sum - c;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = sum;
      }
    }
    const double d_i = alpha[i] - old_i;
    const double d_j = alpha[j] - old_j;
    for (int t = 0; t < n; ++t) grad[t] += q(i, t) * d_i + q(j, t) * d_j;
  }
  model.iterations_ = iter;

  // rho from free variables, else the midpoint of the feasible interval.
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum_free = 0.0;
  int num_free = 0;
  for (int t = 0; t < n; ++t) {
    const double yg = sign[t] * grad[t];
    if (at_upper(t)) {
      if (sign[t] == -1) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else if (at_lower(t)) {
      if (sign[t] == 1) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else {
      ++num_free;
      sum_free += yg;
    }
  }
  const double rho = num_free > 0 ? sum_free / num_free : 0.5 * (ub + lb);
  model.bias_ = -rho;

  model.coefficients_.resize(l);
  for (int t = 0; t < l; ++t) model.coefficients_[t] = alpha[t] - alpha[t + l];
  double quad_term = 0.0;
  double lin_term = 0.0;
  for (int s = 0; s < l; ++s) {
    for (int t = 0; t < l; ++t) {
      quad_term += model.coefficients_[s] * model.coefficients_[t] *
                   kernel[s * l + t];
    }
    lin_term += params.epsilon * (alpha[s] + alpha[s + l]) -
                targets[s] * model.coefficients_[s];
  }
  model.dual_objective_ = 0.5 * quad_term + lin_term;
  return model;
}

double SvrModel::Predict(const Point2& point) const {
  double f = bias_;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (coefficients_[i] != 0.0) {
      f += coefficients_[i] * RbfKernel(points_[i], point, width_km_);
    }
  }
  return f;
}

}  // namespace qcota
