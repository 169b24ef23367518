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

#include "qcota/spe.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcota/errors.h"

namespace qcota {
namespace {

// Deviations from the mean, rescaled to a max magnitude of 1 so that any
// finite input stays finite. `log_scale` is the log of that rescaling.
struct Centered {
  std::vector<double> values;
  double norm2 = 0.0;
  double log_scale = 0.0;
};

Centered Center(std::span<const double> s) {
  Centered c;
  double mean = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    mean += (s[i] - mean) / static_cast<double>(i + 1);
  }
  double scale = 0.0;
  c.values.reserve(s.size());
  for (double v : s) {
    c.values.push_back(0.5 * v - 0.5 * mean);
    scale = std::max(scale, std::abs(c.values.back()));
  }
  if (scale == 0.0) return c;
  for (double& v : c.values) {
    v /= scale;
    c.norm2 += v * v;
  }
  c.log_scale = std::log(2.0 * scale);
  return c;
}

double MiFromCentered(const Centered& u, const Centered& v) {
  if (u.norm2 <= 0.0 || v.norm2 <= 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    dot += u.values[i] * v.values[i];
  }
  const double r2 = std::min(dot * dot / (u.norm2 * v.norm2),
                             kMaxSquaredCorrelation);
  return -0.5 * std::log1p(-r2);
}

}  // namespace

double TemporalEntropy(std::span<const double> series, int window,
                       double sigma_floor) {
  if (series.empty()) throw DomainError("temporal entropy of an empty series");
  if (window > 0 && static_cast<std::size_t>(window) < series.size()) {
    series = series.last(static_cast<std::size_t>(window));
  }
  double log_sigma = std::log(sigma_floor);
  if (series.size() >= 2) {
    const Centered c = Center(series);
    if (c.norm2 > 0.0) {
      log_sigma = std::max(
          log_sigma, c.log_scale + 0.5 * std::log(c.norm2 / static_cast<double>(
                                                      series.size() - 1)));
    }
  }
  return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e) + log_sigma;
}

double PairwiseMutualInformation(std::span<const double> u,
                                 std::span<const double> v) {
  if (u.size() != v.size()) throw DomainError("MI of series of unequal length");
  if (u.size() < 2) return 0.0;
  return MiFromCentered(Center(u), Center(v));
}

double SpatialMutualInformation(std::span<const double> target,
                                std::span<const std::span<const double>> others) {
  const Centered t = Center(target);
  double sum = 0.0;
  for (const auto& o : others) {
    if (o.size() != target.size()) {
      throw DomainError("MI of series of unequal length");
    }
    if (target.size() >= 2) sum += MiFromCentered(t, Center(o));
  }
  return sum;
}

std::vector<double> MinMaxNormalize(std::span<const double> v) {
  std::vector<double> out(v.size(), 0.0);
  if (v.empty()) return out;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double range = *hi - *lo;
  if (range <= 0.0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - *lo) / range;
  return out;
}

PriorityScores ComputePriorities(std::span<const std::span<const double>> series,
                                 const SpeParams& params) {
  const std::size_t num_cells = series.size();
  PriorityScores out;
  out.alpha_te = params.alpha_te;
  out.alpha_smi = params.alpha_smi;
  out.raw_te.resize(num_cells);
  out.raw_smi.assign(num_cells, 0.0);
  std::vector<Centered> centered;
  centered.reserve(num_cells);
  for (std::size_t x = 0; x < num_cells; ++x) {
    if (series[x].empty() || series[x].size() != series[0].size()) {
      throw DomainError("priority history must be non-empty and aligned");
    }
    out.raw_te[x] = TemporalEntropy(series[x], params.window, params.sigma_floor);
    centered.push_back(Center(series[x]));
  }
  if (num_cells > 0 && series[0].size() >= 2) {
    for (std::size_t x = 0; x < num_cells; ++x) {
      for (std::size_t i = x + 1; i < num_cells; ++i) {
        const double mi = MiFromCentered(centered[x], centered[i]);
        out.raw_smi[x] += mi;
        out.raw_smi[i] += mi;
      }
    }
  }
  out.te = params.normalize ? MinMaxNormalize(out.raw_te) : out.raw_te;
  out.smi = params.normalize ? MinMaxNormalize(out.raw_smi) : out.raw_smi;
  out.ps.resize(num_cells);
  for (std::size_t x = 0; x < num_cells; ++x) {
    out.ps[x] = params.alpha_te * out.te[x] + params.alpha_smi * out.smi[x];
  }
  return out;
}

PriorityScores ComputePriorities(const MeasurementStore& store, int attribute,
                                 int history, const SpeParams& params) {
  if (history < 1) throw DomainError("priorities need at least one cycle of history");
  std::vector<std::span<const double>> series;
  for (int x = 0; x < store.num_cells(); ++x) {
    series.push_back(store.InferredHistory(attribute, x, history));
  }
  PriorityScores out = ComputePriorities(series, params);
  out.attribute = attribute;
  out.cycle = history;
  return out;
}

}  // namespace qcota
