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

// Report serialization: per-configuration CSV rows, per-cycle JSON traces,
// weight trajectories and the scheme-by-grid tables of a sweep.

#ifndef QCOTA_REPORT_H_
#define QCOTA_REPORT_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qcota/simulation.h"

namespace qcota {

enum class Metric { kEpsilon, kPhi };

// One line per row: scheme,inference,participants,attributes,epsilon,phi_km,
// seed,epsilon_sd,phi_km_sd,repeats.
std::string ReportCsv(const ExperimentReport& report);

// cycle,attribute,weight,loss for every cycle of one run. Loss is empty for
// schemes that do not learn weights.
std::string WeightsCsv(const RunResult& run,
                       const std::vector<std::string>& attribute_names);

// Configuration rows with the per-cycle traces of every kept repeat.
nlohmann::json TracesJson(const ExperimentReport& report);

// Rows are (scheme, inference), columns are (participants, attributes) in
// ascending order; cells hold the metric mean.
std::string SweepTable(const ExperimentReport& report, Metric metric);

// Fixed-precision formatting shared by every writer.
std::string FormatNumber(double value);

void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace qcota

#endif  // QCOTA_REPORT_H_
