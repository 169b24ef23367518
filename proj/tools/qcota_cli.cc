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

// Command-line driver: simulate, sweep, generate and validate.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qcota/data.h"
#include "qcota/errors.h"
#include "qcota/report.h"
#include "qcota/simulation.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitRuntime = 4;

struct Options {
  std::string config;
  std::string dataset;
  std::string stations;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
  int repeats = 1;
  bool literal_bellman = false;
};

qcota::Dataset LoadInput(const Options& opt) {
  if (opt.dataset.empty() || opt.stations.empty()) {
    throw qcota::ConfigError("--dataset and --stations are required");
  }
  qcota::LoadedDataset loaded = qcota::LoadDataset(opt.dataset, opt.stations);
  for (const std::string& w : loaded.report.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return std::move(loaded.dataset);
}

fs::path OutDir(const Options& opt) {
  fs::path dir(opt.out);
  fs::create_directories(dir);
  return dir;
}

int Simulate(const Options& opt) {
  if (opt.config.empty()) throw qcota::ConfigError("--config is required");
  qcota::RunConfig cfg = qcota::ParseRunConfig(qcota::ReadJsonFile(opt.config));
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.literal_bellman) cfg.literal_bellman = true;
  if (opt.repeats < 1) throw qcota::ConfigError("--repeats must be >= 1");
  const qcota::Dataset dataset = LoadInput(opt);
  const qcota::ExperimentReport report =
      qcota::RunExperiment(cfg, dataset, opt.repeats, /*keep_traces=*/true);
  const fs::path dir = OutDir(opt);
  qcota::WriteTextFile(dir / "report.csv", qcota::ReportCsv(report));
  qcota::WriteTextFile(dir / "traces.json", qcota::TracesJson(report).dump(1));
  qcota::WriteTextFile(
      dir / "weights.csv",
      qcota::WeightsCsv(report.runs.front().front(), report.attribute_names));
  const qcota::ReportRow& row = report.rows.front();
  std::printf("%s %s P=%d A=%d epsilon=%s phi_km=%s\n",
              std::string(qcota::SchemeName(row.scheme)).c_str(),
              std::string(qcota::InferenceName(row.inference)).c_str(),
              row.participants, row.attributes,
              qcota::FormatNumber(row.epsilon).c_str(),
              qcota::FormatNumber(row.phi).c_str());
  return 0;
}

int Sweep(const Options& opt) {
  if (opt.config.empty()) throw qcota::ConfigError("--config is required");
  qcota::SweepConfig sweep =
      qcota::ParseSweepConfig(qcota::ReadJsonFile(opt.config));
  if (opt.seed) sweep.seed = *opt.seed;
  if (opt.literal_bellman) sweep.literal_bellman = true;
  const qcota::Dataset dataset = LoadInput(opt);
  const qcota::ExperimentReport report = qcota::RunSweep(sweep, dataset);
  const fs::path dir = OutDir(opt);
  qcota::WriteTextFile(dir / "report.csv", qcota::ReportCsv(report));
  qcota::WriteTextFile(dir / "table_epsilon.csv",
                       qcota::SweepTable(report, qcota::Metric::kEpsilon));
  qcota::WriteTextFile(dir / "table_phi.csv",
                       qcota::SweepTable(report, qcota::Metric::kPhi));
  std::printf("%zu rows written to %s\n", report.rows.size(),
              dir.string().c_str());
  return 0;
}

int Generate(const Options& opt) {
  if (opt.config.empty()) throw qcota::ConfigError("--config is required");
  qcota::SyntheticConfig cfg =
      qcota::ParseSyntheticConfig(qcota::ReadJsonFile(opt.config));
  if (opt.seed) cfg.seed = *opt.seed;
  const qcota::Dataset dataset = qcota::GenerateSynthetic(cfg);
  const fs::path dir = OutDir(opt);
  qcota::WriteDataset(dataset, dir / "measurements.csv", dir / "stations.csv");
  std::printf("X=%d Y=%d A=%d written to %s\n", dataset.num_cells(),
              dataset.num_cycles(), dataset.num_attributes(),
              dir.string().c_str());
  return 0;
}

int Validate(const Options& opt) {
  std::optional<qcota::RunConfig> cfg;
  if (!opt.config.empty()) {
    const nlohmann::json doc = qcota::ReadJsonFile(opt.config);
    if (doc.contains("schemes") || doc.contains("participants")) {
      qcota::ParseSweepConfig(doc);
    } else {
      cfg = qcota::ParseRunConfig(doc);
    }
  }
  if (!opt.dataset.empty() || !opt.stations.empty()) {
    const qcota::Dataset dataset = LoadInput(opt);
    if (cfg) qcota::ValidateRunConfigFor(*cfg, dataset);
    std::printf("dataset: X=%d Y=%d A=%d\n", dataset.num_cells(),
                dataset.num_cycles(), dataset.num_attributes());
  }
  std::printf("ok\n");
  return 0;
}

void AddCommon(CLI::App* cmd, Options& opt, bool run_flags) {
  cmd->add_option("--config", opt.config, "JSON configuration file");
  cmd->add_option("--dataset", opt.dataset, "measurements CSV");
  cmd->add_option("--stations", opt.stations, "stations CSV");
  cmd->add_option("--out", opt.out, "output directory");
  cmd->add_option("--seed", opt.seed, "override the configured seed");
  if (run_flags) {
    cmd->add_option("--repeats", opt.repeats, "independent repeats");
    cmd->add_flag("--literal-bellman", opt.literal_bellman,
                  "value iteration with the distance reward only");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quality-cost-aware task allocation simulator"};
  app.require_subcommand(1);
  Options opt;
  CLI::App* simulate = app.add_subcommand("simulate", "run one configuration");
  CLI::App* sweep = app.add_subcommand("sweep", "run a configuration grid");
  CLI::App* generate = app.add_subcommand("generate", "write a synthetic dataset");
  CLI::App* validate = app.add_subcommand("validate", "check config and data files");
  AddCommon(simulate, opt, true);
  AddCommon(sweep, opt, true);
  AddCommon(generate, opt, false);
  AddCommon(validate, opt, false);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  try {
    if (simulate->parsed()) return Simulate(opt);
    if (sweep->parsed()) return Sweep(opt);
    if (generate->parsed()) return Generate(opt);
    return Validate(opt);
  } catch (const qcota::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qcota::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const qcota::ConvergenceError& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const qcota::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
