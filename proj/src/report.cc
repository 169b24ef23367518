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

#include "qcota/report.h"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include "qcota/errors.h"

namespace qcota {

std::string FormatNumber(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10f", value);
  return buf;
}

std::string ReportCsv(const ExperimentReport& report) {
  std::string out =
      "scheme,inference,participants,attributes,epsilon,phi_km,seed,"
      "epsilon_sd,phi_km_sd,repeats\n";
  for (const ReportRow& row : report.rows) {
    char seed[32];
    std::snprintf(seed, sizeof(seed), "%" PRIu64, row.seed);
    out += std::string(SchemeName(row.scheme)) + "," +
           std::string(InferenceName(row.inference)) + "," +
           std::to_string(row.participants) + "," +
           std::to_string(row.attributes) + "," + FormatNumber(row.epsilon) +
           "," + FormatNumber(row.phi) + "," + seed + "," +
           FormatNumber(row.epsilon_sd) + "," + FormatNumber(row.phi_sd) + "," +
           std::to_string(row.repeats) + "\n";
  }
  return out;
}

std::string WeightsCsv(const RunResult& run,
                       const std::vector<std::string>& attribute_names) {
  std::string out = "cycle,attribute,weight,loss\n";
  for (const CycleTrace& t : run.traces) {
    for (std::size_t a = 0; a < t.weights.size(); ++a) {
      out += std::to_string(t.cycle) + "," + attribute_names.at(a) + "," +
             FormatNumber(t.weights[a]) + ",";
      if (a < t.losses.size()) out += FormatNumber(t.losses[a]);
      out += "\n";
    }
  }
  return out;
}

namespace {

nlohmann::json TraceJson(const CycleTrace& t) {
  nlohmann::json assignments = nlohmann::json::array();
  for (const Assignment& a : t.assignments) {
    assignments.push_back(
        {{"participant", a.participant_id}, {"from", a.from_cell}, {"to", a.to_cell}});
  }
  return {{"cycle", t.cycle},
          {"bootstrap", t.bootstrap},
          {"selected_cells", t.selected_cells},
          {"assignments", assignments},
          {"weights", t.weights},
          {"losses", t.losses},
          {"normalized_losses", t.normalized_losses},
          {"mean_cost_km", t.mean_cost},
          {"normalized_error", t.normalized_error},
          {"value_iteration_sweeps", t.value_iteration_sweeps}};
}

}  // namespace

nlohmann::json TracesJson(const ExperimentReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ReportRow& row = report.rows[i];
    nlohmann::json repeats = nlohmann::json::array();
    if (i < report.runs.size()) {
      for (const RunResult& run : report.runs[i]) {
        nlohmann::json cycles = nlohmann::json::array();
        for (const CycleTrace& t : run.traces) cycles.push_back(TraceJson(t));
        repeats.push_back({{"seed", run.seed},
                           {"epsilon", run.epsilon},
                           {"phi_km", run.phi},
                           {"normalization_range", run.normalization_range},
                           {"cycles", cycles}});
      }
    }
    rows.push_back({{"scheme", SchemeName(row.scheme)},
                    {"inference", InferenceName(row.inference)},
                    {"participants", row.participants},
                    {"attributes", row.attributes},
                    {"epsilon", row.epsilon},
                    {"phi_km", row.phi},
                    {"repeats", repeats}});
  }
  return {{"attribute_names", report.attribute_names}, {"rows", rows}};
}

std::string SweepTable(const ExperimentReport& report, Metric metric) {
  using RowKey = std::pair<int, int>;  // scheme, inference
  using ColKey = std::pair<int, int>;  // participants, attributes
  std::vector<RowKey> row_order;
  std::set<ColKey> cols;
  std::map<std::pair<RowKey, ColKey>, double> cells;
  for (const ReportRow& r : report.rows) {
    const RowKey rk{static_cast<int>(r.scheme), static_cast<int>(r.inference)};
    if (std::find(row_order.begin(), row_order.end(), rk) == row_order.end()) {
      row_order.push_back(rk);
    }
    const ColKey ck{r.participants, r.attributes};
    cols.insert(ck);
    cells[{rk, ck}] = metric == Metric::kEpsilon ? r.epsilon : r.phi;
  }
  std::string out = "scheme,inference";
  for (const ColKey& c : cols) {
    out += ",P" + std::to_string(c.first) + "_A" + std::to_string(c.second);
  }
  out += "\n";
  for (const RowKey& rk : row_order) {
    out += std::string(SchemeName(static_cast<Scheme>(rk.first))) + "," +
           std::string(InferenceName(static_cast<InferenceKind>(rk.second)));
    for (const ColKey& c : cols) {
      out += ",";
      auto it = cells.find({rk, c});
      if (it != cells.end()) out += FormatNumber(it->second);
    }
    out += "\n";
  }
  return out;
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path.string());
  f << text;
  if (!f) throw DataError("failed writing " + path.string());
}

}  // namespace qcota
