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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qcota/data.h"
#include "qcota/mpi.h"
#include "qcota/nts.h"
#include "qcota/report.h"
#include "qcota/simulation.h"
#include "qcota/spe.h"

namespace qcota {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

// Independent normal quantile: bisection on 0.5 * erfc(-z / sqrt 2).
double BisectionQuantile(double p) {
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (0.5 * std::erfc(-mid / std::numbers::sqrt2) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// 1. Closed forms against direct formulas on randomized inputs.
Outcome ClosedFormSuite() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> n(0.0, 1.0);
  double worst = 0.0;
  const auto track = [&](double got, double want) {
    worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
  };
  constexpr int kCases = 25;
  for (int t = 0; t < kCases; ++t) {
    const int len = 2 + static_cast<int>(30 * u(rng));
    const double scale = std::exp(6 * u(rng) - 3);
    std::vector<double> s(len), v(len);
    for (int i = 0; i < len; ++i) {
      s[i] = scale * n(rng) + 10 * u(rng);
      v[i] = 0.6 * s[i] + scale * n(rng);
    }
    // Entropy of the fitted normal.
    double mean = 0.0;
    for (double x : s) mean += x;
    mean /= len;
    double var = 0.0;
    for (double x : s) var += (x - mean) * (x - mean);
    var /= (len - 1);
    track(TemporalEntropy(s, 0, 1e-6),
          0.5 * std::log(2 * std::numbers::pi * std::numbers::e * std::max(var, 1e-12)));
    // Gaussian mutual information from Pearson correlation.
    double mv = 0.0;
    for (double x : v) mv += x;
    mv /= len;
    double sxy = 0, sxx = 0, syy = 0;
    for (int i = 0; i < len; ++i) {
      sxy += (s[i] - mean) * (v[i] - mv);
      sxx += (s[i] - mean) * (s[i] - mean);
      syy += (v[i] - mv) * (v[i] - mv);
    }
    const double r2 = std::min(sxy * sxy / (sxx * syy), 1 - 1e-9);
    track(PairwiseMutualInformation(s, v), -0.5 * std::log(1 - r2));
    // Quantile loss of the residual normal.
    const double delta = 0.5 + 0.49 * u(rng) + 0.001;
    double rm = 0.0;
    std::vector<double> res(len);
    for (int i = 0; i < len; ++i) rm += (res[i] = std::abs(v[i] - s[i]));
    rm /= len;
    double rv = 0.0;
    for (double r : res) rv += (r - rm) * (r - rm);
    const double rsd = std::sqrt(rv / (len - 1));
    track(EstimateLoss(s, v, delta), std::max(0.0, rm + rsd * BisectionQuantile(delta)));
    // Exponential weight update.
    const int a_n = 2 + t % 4;
    std::vector<double> w(a_n), loss(a_n);
    double wsum = 0.0;
    for (int a = 0; a < a_n; ++a) wsum += (w[a] = 0.05 + u(rng));
    for (int a = 0; a < a_n; ++a) {
      w[a] /= wsum;
      loss[a] = 3 * u(rng);
    }
    const double eta = 2 * u(rng);
    const WeightUpdate upd = UpdateWeights(w, loss, eta);
    double z = 0.0;
    for (int a = 0; a < a_n; ++a) z += w[a] * std::exp(-eta * loss[a]);
    for (int a = 0; a < a_n; ++a) track(upd.weights[a], w[a] * std::exp(-eta * loss[a]) / z);
    // Composite reward.
    const double ups = u(rng), d = 20 * u(rng), gamma = 3 * u(rng), floor = 0.1 + u(rng);
    track(Reward(ups, d, gamma, floor), ups + gamma / (d > floor ? d : floor));
  }
  const double secs = Seconds(start);
  return {worst <= 1e-9 && secs < 1.0,
          Fmt("%.0f cases per operation, worst rel. error %.2e, %.3f s", kCases, worst, secs)};
}

// 2. Two-state fixed point and contraction on random MDPs.
Outcome ValueIterationSuite() {
  const auto start = Clock::now();
  const GridGeometry two({{0, 0.0, 0.0}, {1, 1.0, 0.0}});
  NtsParams p;
  p.gamma = 0.1;
  p.beta = 0.5;
  p.d_floor_km = 0.5;
  p.theta_conv = 1e-6;
  const QrsRanking r = ValueIteration(BuildMdp(std::vector<double>{1.0, 0.0}, two, p));
  const double err = std::max(std::abs(r.qrs[0] - 2.4), std::abs(r.qrs[1] - 2.3));
  bool fixed_point = err <= 1e-6;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int monotone = 0;
  for (int t = 0; t < 50; ++t) {
    const int x = 1 + t % 10;
    std::vector<Cell> cells;
    std::vector<double> ups;
    for (int i = 0; i < x; ++i) {
      cells.push_back({i, 30 * u(rng), 30 * u(rng)});
      ups.push_back(u(rng));
    }
    NtsParams q;
    q.gamma = 2 * u(rng);
    q.beta = 0.05 + 0.9 * u(rng);
    q.d_floor_km = 0.1 + u(rng);
    q.theta_conv = 1e-9;
    const QrsRanking rr = ValueIteration(BuildMdp(ups, GridGeometry(cells), q));
    bool ok = true;
    for (std::size_t s = 2; s < rr.sweep_deltas.size(); ++s) {
      ok = ok && rr.sweep_deltas[s] <= rr.sweep_deltas[s - 1] + 1e-12;
    }
    monotone += ok;
  }
  const double secs = Seconds(start);
  return {fixed_point && monotone == 50 && secs < 1.0,
          Fmt("V* error %.2e, monotone contraction on %.0f/50 MDPs, %.3f s", err,
              monotone, secs)};
}

// 3. Per-cycle rank of QCO-TA's allocation among all C(6,2) allocations under
// normalized error + lambda * cost, lambda = gamma / (mean pairwise km)^2.
Outcome BruteForceSuite() {
  const auto start = Clock::now();
  double percentile_sum = 0.0;
  int cycles = 0;
  for (int seed = 1; seed <= 20; ++seed) {
    SyntheticConfig syn;
    syn.cells = 6;
    syn.cycles = 30;
    syn.attributes = 2;
    syn.seed = seed;
    const Dataset d = GenerateSynthetic(syn);
    RunConfig cfg;
    cfg.participants = 2;
    cfg.seed = seed;
    double mean_d = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) mean_d += d.geometry.Distance(i, j) / 15.0;
    const double lambda = cfg.hyperparameters.gamma / (mean_d * mean_d);
    Simulation sim(d, cfg);
    sim.RunCycle();
    while (!sim.done()) {
      const auto objective = [&](const AllocationPlan& plan) {
        Simulation trial = sim;
        trial.ExecutePlan(plan);
        const CycleTrace& t = trial.traces().back();
        return t.normalized_error + lambda * t.mean_cost;
      };
      const AllocationPlan chosen = sim.PlanCycle();
      const double own = objective(chosen);
      int better = 0;
      for (CellId a = 0; a < 6; ++a) {
        for (CellId b = a + 1; b < 6; ++b) {
          const std::vector<CellId> cells = {a, b};
          const AllocationPlan alt =
              MatchNearestFirst(sim.cycle(), cells, sim.participants(), d.geometry);
          better += objective(alt) < own - 1e-12;
        }
      }
      percentile_sum += better / 15.0;
      ++cycles;
      sim.ExecutePlan(chosen);
    }
  }
  const double mean = percentile_sum / cycles;
  const double secs = Seconds(start);
  return {mean <= 0.4 && secs < 30.0,
          Fmt("mean fraction of strictly better allocations %.3f (<= 0.400), %.1f s", mean,
              secs)};
}

struct ProtocolRuns {
  // [scheme][inference][A][P] -> per-seed results.
  std::map<std::tuple<Scheme, InferenceKind, int, int>, std::vector<RunResult>> runs;
  double seconds = 0.0;
};

ProtocolRuns RunProtocol(const std::vector<InferenceKind>& inferences) {
  const auto start = Clock::now();
  ProtocolRuns out;
  for (int seed = 1; seed <= 20; ++seed) {
    for (int a : {2, 4}) {
      SyntheticConfig syn;
      syn.cells = 24;
      syn.cycles = 100;
      syn.attributes = a;
      syn.cross_attribute_correlation = 0.6;
      syn.seed = seed;
      const Dataset d = GenerateSynthetic(syn);
      for (Scheme s : AllSchemes()) {
        for (InferenceKind k : inferences) {
          for (int p : {8, 14}) {
            RunConfig cfg;
            cfg.scheme = s;
            cfg.inference = k;
            cfg.participants = p;
            cfg.seed = seed;
            out.runs[{s, k, a, p}].push_back(RunSimulation(d, cfg));
          }
        }
      }
    }
  }
  out.seconds = Seconds(start);
  return out;
}

double MeanMetric(const ProtocolRuns& pr, Scheme s, InferenceKind k, int p,
                  bool epsilon) {
  double total = 0.0;
  int n = 0;
  for (int a : {2, 4}) {
    for (const RunResult& r : pr.runs.at({s, k, a, p})) {
      total += epsilon ? r.epsilon : r.phi;
      ++n;
    }
  }
  return total / n;
}

// 4. Error ordering under KNN.
Outcome ErrorOrdering(const ProtocolRuns& pr) {
  bool ok = true;
  std::string detail;
  for (int p : {8, 14}) {
    const double qco = MeanMetric(pr, Scheme::kQcoTa, InferenceKind::kKnn, p, true);
    const double uns = MeanMetric(pr, Scheme::kUnsTa, InferenceKind::kKnn, p, true);
    const double ewa = MeanMetric(pr, Scheme::kEwaTa, InferenceKind::kKnn, p, true);
    ok = ok && qco <= uns && qco <= ewa;
    detail += Fmt("P=%.0f: QCO-TA %.4f, UNS-TA %.4f", p, qco, uns) +
              Fmt(", EWA-TA %.4f; ", ewa);
  }
  detail += Fmt("protocol runtime %.1f s", pr.seconds);
  return {ok && pr.seconds < 300.0, detail};
}

// 5. Cost ordering under KNN.
Outcome CostOrdering(const ProtocolRuns& pr) {
  bool ok = true;
  std::string detail;
  for (int p : {8, 14}) {
    const double qco = MeanMetric(pr, Scheme::kQcoTa, InferenceKind::kKnn, p, false);
    const double oo = MeanMetric(pr, Scheme::kOoMta, InferenceKind::kKnn, p, false);
    const double uns = MeanMetric(pr, Scheme::kUnsTa, InferenceKind::kKnn, p, false);
    ok = ok && qco < oo && qco < uns;
    detail += Fmt("P=%.0f: QCO-TA %.3f km, OO-MTA %.3f km", p, qco, oo) +
              Fmt(", UNS-TA %.3f km; ", uns);
  }
  return {ok, detail};
}

// 6. More participants, lower error, per (scheme, inference).
Outcome MonotoneInP(const ProtocolRuns& pr) {
  int violations = 0;
  double worst = 0.0;
  std::string names;
  for (Scheme s : AllSchemes()) {
    for (InferenceKind k : {InferenceKind::kKnn, InferenceKind::kIdw, InferenceKind::kSvr}) {
      const double e8 = MeanMetric(pr, s, k, 8, true);
      const double e14 = MeanMetric(pr, s, k, 14, true);
      if (e14 > e8) {
        ++violations;
        worst = std::max(worst, e14 / e8 - 1.0);
        names += std::string(" ") + std::string(SchemeName(s)) + "/" +
                 std::string(InferenceName(k));
      }
    }
  }
  const bool ok = violations == 0 || (violations == 1 && worst < 0.05);
  return {ok, Fmt("%.0f of 15 pairs violate, worst %.2f%%", violations, 100 * worst) +
                  (names.empty() ? "" : ":" + names)};
}

// 7. Smoothed QCO-TA error settles by cycle 25.
Outcome Affordability(const ProtocolRuns& pr) {
  bool ok = true;
  std::string detail;
  for (int a : {2, 4}) {
    for (int p : {8, 14}) {
      const auto& runs = pr.runs.at({Scheme::kQcoTa, InferenceKind::kKnn, a, p});
      const int y_n = runs[0].traces.size();
      std::vector<double> mean(y_n, 0.0);
      for (const RunResult& r : runs) {
        for (int y = 0; y < y_n; ++y) mean[y] += r.traces[y].normalized_error / runs.size();
      }
      double final = 0.0;
      for (int y = y_n - 20; y < y_n; ++y) final += mean[y] / 20.0;
      int reached = -1;
      for (int y = kFirstEvaluatedCycle + 4; y < y_n && reached < 0; ++y) {
        double smooth = 0.0;
        for (int j = y - 4; j <= y; ++j) smooth += mean[j] / 5.0;
        if (std::abs(smooth - final) <= 0.1 * final) reached = y;
      }
      ok = ok && reached >= 0 && reached <= 25;
      detail += Fmt("A=%.0f P=%.0f reached at cycle %.0f; ", a, p, reached);
    }
  }
  return {ok, detail};
}

// 8. A full sweep repeated with the same seed is byte-identical.
Outcome Determinism() {
  const auto start = Clock::now();
  SyntheticConfig syn;
  syn.seed = 8;
  const Dataset d = GenerateSynthetic(syn);
  SweepConfig sweep = ParseSweepConfig(nlohmann::json::object());
  sweep.seed = 31;
  std::string first;
  bool same = true;
  for (int run = 0; run < 2; ++run) {
    const ExperimentReport r = RunSweep(sweep, d);
    const std::string all = ReportCsv(r) + SweepTable(r, Metric::kEpsilon) +
                            SweepTable(r, Metric::kPhi);
    if (run == 0) first = all;
    else same = all == first;
  }
  return {same, Fmt("180-row sweep run twice, %.1f s", Seconds(start))};
}

// 9. Round trip and the 24-station fixture.
Outcome Ingestion() {
  namespace fs = std::filesystem;
  SyntheticConfig syn;
  syn.seed = 90;
  const Dataset d = GenerateSynthetic(syn);
  const fs::path dir = fs::temp_directory_path() / "qcota_acceptance_roundtrip";
  fs::create_directories(dir);
  WriteDataset(d, dir / "m.csv", dir / "s.csv");
  const LoadedDataset back = LoadDataset(dir / "m.csv", dir / "s.csv");
  fs::remove_all(dir);
  const bool exact = back.dataset.truth == d.truth;
  const fs::path data = QCOTA_TEST_DATA_DIR;
  const LoadedDataset fixture =
      LoadDataset(data / "piemonte_measurements.csv", data / "piemonte_stations.csv");
  const int x = fixture.dataset.num_cells(), a = fixture.dataset.num_attributes();
  return {exact && x == 24 && a == 4,
          std::string(exact ? "RS round-trips exactly" : "RS differs after round trip") +
              Fmt("; fixture X=%.0f A=%.0f", x, a)};
}

}  // namespace
}  // namespace qcota

int main() {
  using qcota::Outcome;
  int failures = 0;
  const auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("[%s] criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  };
  report(1, "closed-form math", qcota::ClosedFormSuite());
  report(2, "value-iteration fixed point", qcota::ValueIterationSuite());
  report(3, "brute-force optimality bound", qcota::BruteForceSuite());
  const qcota::ProtocolRuns protocol = qcota::RunProtocol(
      {qcota::InferenceKind::kKnn, qcota::InferenceKind::kIdw, qcota::InferenceKind::kSvr});
  report(4, "error ordering", qcota::ErrorOrdering(protocol));
  report(5, "cost ordering", qcota::CostOrdering(protocol));
  report(6, "monotonicity in P", qcota::MonotoneInP(protocol));
  report(7, "affordability", qcota::Affordability(protocol));
  report(8, "determinism", qcota::Determinism());
  report(9, "ingestion round trip", qcota::Ingestion());
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
