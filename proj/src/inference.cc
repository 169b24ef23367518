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

#include "qcota/inference.h"

#include <algorithm>
#include <numeric>

#include "qcota/errors.h"

namespace qcota {
namespace {

struct Neighbor {
  double distance;
  CellId cell;
  double value;
};

std::vector<Neighbor> Nearest(std::span<const Sample> collected,
                              const GridGeometry& geom, int count,
                              CellId target) {
  if (collected.empty()) throw DomainError("no collected samples to infer from");
  std::vector<Neighbor> all;
  all.reserve(collected.size());
  for (const Sample& s : collected) {
    all.push_back({geom.Distance(s.cell, target), s.cell, s.value});
  }
  const std::size_t keep =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(count, 1)), 1,
                              all.size());
  std::partial_sort(all.begin(), all.begin() + keep, all.end(),
                    [](const Neighbor& l, const Neighbor& r) {
                      return l.distance < r.distance ||
                             (l.distance == r.distance && l.cell < r.cell);
                    });
  all.resize(keep);
  return all;
}

std::vector<Point2> Coordinates(std::span<const Sample> collected,
                                const GridGeometry& geom) {
  std::vector<Point2> pts;
  for (const Sample& s : collected) {
    const Cell& c = geom.cell(s.cell);
    pts.push_back({c.x_km, c.y_km});
  }
  return pts;
}

double Mean(std::span<const Sample> collected) {
  double sum = 0.0;
  for (const Sample& s : collected) sum += s.value;
  return sum / static_cast<double>(collected.size());
}

}  // namespace

double KnnEstimate(std::span<const Sample> collected, const GridGeometry& geom,
                   int k, CellId target) {
  const auto nn = Nearest(collected, geom, k, target);
  double sum = 0.0;
  for (const Neighbor& n : nn) sum += n.value;
  return sum / static_cast<double>(nn.size());
}

double IdwEstimate(std::span<const Sample> collected, const GridGeometry& geom,
                   int n, CellId target) {
  const auto nn = Nearest(collected, geom, n, target);
  if (nn.front().distance == 0.0) return nn.front().value;
  double num = 0.0;
  double den = 0.0;
  for (const Neighbor& nb : nn) {
    num += nb.value / nb.distance;
    den += 1.0 / nb.distance;
  }
  return num / den;
}

double SvrEstimate(std::span<const Sample> collected, const GridGeometry& geom,
                   const SvrParams& params, CellId target) {
  const CellId targets[] = {target};
  return EstimateCells(InferenceStrategy::Svr(params), collected, geom,
                       targets)[0];
}

std::vector<double> EstimateCells(const InferenceStrategy& strategy,
                                  std::span<const Sample> collected,
                                  const GridGeometry& geom,
                                  std::span<const CellId> targets) {
  if (collected.empty()) throw DomainError("no collected samples to infer from");
  std::vector<double> out;
  out.reserve(targets.size());
  switch (strategy.kind) {
    case InferenceKind::kKnn:
      for (CellId t : targets) out.push_back(KnnEstimate(collected, geom, strategy.k, t));
      break;
    case InferenceKind::kIdw:
      for (CellId t : targets) out.push_back(IdwEstimate(collected, geom, strategy.n, t));
      break;
    case InferenceKind::kSvr: {
      if (collected.size() < 2) {
        out.assign(targets.size(), Mean(collected));
        break;
      }
      const std::vector<Point2> pts = Coordinates(collected, geom);
      std::vector<double> values;
      for (const Sample& s : collected) values.push_back(s.value);
      const SvrModel model = SvrModel::Fit(pts, values, strategy.svr);
      for (CellId t : targets) {
        const Cell& c = geom.cell(t);
        out.push_back(model.Predict({c.x_km, c.y_km}));
      }
      break;
    }
  }
  return out;
}

std::vector<double> InferCycle(const InferenceStrategy& strategy,
                               const MeasurementStore& store,
                               const GridGeometry& geom, int cycle,
                               int attribute,
                               std::optional<std::span<const double>>
                                   previous_row) {
  std::vector<Sample> samples;
  std::vector<CellId> targets;
  for (int x = 0; x < store.num_cells(); ++x) {
    if (auto v = store.collected(attribute, x, cycle)) {
      samples.push_back({x, *v});
    } else {
      targets.push_back(x);
    }
  }
  if (samples.empty()) {
    if (!previous_row) {
      throw DomainError("no collected cells and no previous inferred row");
    }
    return {previous_row->begin(), previous_row->end()};
  }
  std::vector<double> row(store.num_cells());
  for (const Sample& s : samples) row[s.cell] = s.value;
  if (!targets.empty()) {
    const std::vector<double> est = EstimateCells(strategy, samples, geom, targets);
    for (std::size_t i = 0; i < targets.size(); ++i) row[targets[i]] = est[i];
  }
  return row;
}

std::vector<double> LeaveOneOutPredictions(const InferenceStrategy& strategy,
                                           std::span<const Sample> collected,
                                           const GridGeometry& geom) {
  if (collected.size() < 2) {
    throw DomainError("leave-one-out needs at least two samples");
  }
  std::vector<double> out(collected.size());
  std::vector<Sample> rest;
  for (std::size_t i = 0; i < collected.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < collected.size(); ++j) {
      if (j != i) rest.push_back(collected[j]);
    }
    const CellId target[] = {collected[i].cell};
    out[i] = EstimateCells(strategy, rest, geom, target)[0];
  }
  return out;
}

}  // namespace qcota
