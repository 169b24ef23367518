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

// Datasets, synthetic field generation and run configuration.

#ifndef QCOTA_DATA_H_
#define QCOTA_DATA_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qcota/core.h"

namespace qcota {

// Ground truth for a replay: geometry, attribute names and RS[A][X][Y].
struct Dataset {
  GridGeometry geometry;
  std::vector<std::string> attribute_names;
  ValueCube truth;

  int num_attributes() const { return truth.attributes(); }
  int num_cells() const { return truth.cells(); }
  int num_cycles() const { return truth.cycles(); }
};

// Throws DataError on NaN/inf values, shape mismatches, Y < 2 or A < 1.
void ValidateDataset(const Dataset& dataset);

// Restricts a dataset to the given attribute indices, in that order.
Dataset SelectAttributes(const Dataset& dataset, const std::vector<int>& keep);

struct LoadReport {
  int duplicate_rows = 0;
  int interpolated_entries = 0;
  std::vector<std::string> warnings;
};

struct LoadedDataset {
  Dataset dataset;
  LoadReport report;
};

// Reads `cell_id,x_km,y_km` or `cell_id,lat,lon`; lat/lon are projected
// equirectangularly about the station centroid.
GridGeometry LoadStations(const std::filesystem::path& path);

// Reads `cycle,cell_id,attribute,value` rows. Attributes are numbered in
// order of first appearance. Gaps are filled by linear interpolation in time
// per (attribute, cell); duplicate rows keep the last value.
LoadedDataset LoadDataset(const std::filesystem::path& measurements_path,
                          const std::filesystem::path& stations_path);

// Writes both CSV files with round-trip precision.
void WriteDataset(const Dataset& dataset,
                  const std::filesystem::path& measurements_path,
                  const std::filesystem::path& stations_path);

struct SyntheticConfig {
  int cells = 24;
  int cycles = 100;
  int attributes = 4;
  double spatial_length_scale_km = 25.0;
  double temporal_correlation = 0.8;
  double cross_attribute_correlation = 0.6;
  double noise_sd = 0.05;
  std::uint64_t seed = 1;
  double region_width_km = 90.0;
  double region_height_km = 70.0;
};

// Throws ConfigError when a field is out of range.
void ValidateSyntheticConfig(const SyntheticConfig& cfg);

// Per latent source: an AR(1) series per cell, mixed in space by a Gaussian
// kernel over cell coordinates. Attributes combine the sources through the
// square root of the equicorrelation matrix with off-diagonal rho, then get
// an attribute-specific offset and scale plus white noise.
Dataset GenerateSynthetic(const SyntheticConfig& cfg);

enum class Scheme { kQcoTa, kOoMta, kGpsTa, kEwaTa, kUnsTa };
enum class InferenceKind { kKnn, kIdw, kSvr };

std::string_view SchemeName(Scheme scheme);
std::string_view InferenceName(InferenceKind kind);
Scheme ParseScheme(std::string_view name);
InferenceKind ParseInference(std::string_view name);
const std::vector<Scheme>& AllSchemes();

struct Hyperparameters {
  double alpha_te = 0.5;
  double alpha_smi = 0.5;
  double eta = 0.5;
  double delta = 0.95;
  double gamma = 1.0;
  double beta = 0.5;
  double theta_conv = 1e-4;
  int k_knn = 3;
  int n_idw = 3;
  // Unset means half the smallest nonzero pairwise cell distance.
  std::optional<double> d_floor_km;
  double cost_per_km = 1.0;
  // Number of trailing cycles used for temporal entropy; 0 is the full
  // history.
  int entropy_window = 0;
  // Blend raw TE and SMI instead of their per-cycle min-max normalization.
  bool raw_priority_scale = false;
};

struct RunConfig {
  Scheme scheme = Scheme::kQcoTa;
  InferenceKind inference = InferenceKind::kKnn;
  int participants = 8;
  // Attribute indices into the dataset; empty selects all.
  std::vector<int> attributes_used;
  Hyperparameters hyperparameters;
  std::uint64_t seed = 1;
  bool literal_bellman = false;
};

// Checks ranges that do not depend on the dataset.
void ValidateRunConfig(const RunConfig& cfg);
// Checks the config against a dataset shape (P < X, attribute indices,
// P >= A for GPS-TA). Throws ConfigError.
void ValidateRunConfigFor(const RunConfig& cfg, const Dataset& dataset);
std::vector<int> ResolvedAttributes(const RunConfig& cfg, int num_attributes);

// A grid of run configurations sharing hyperparameters.
struct SweepConfig {
  std::vector<Scheme> schemes;
  std::vector<InferenceKind> inferences;
  std::vector<int> participants;
  // Attribute counts; each count n selects attributes 0..n-1.
  std::vector<int> attribute_counts;
  int repeats = 1;
  std::uint64_t seed = 1;
  Hyperparameters hyperparameters;
  bool literal_bellman = false;
};

// JSON mappings. Unknown keys raise ConfigError.
RunConfig ParseRunConfig(const nlohmann::json& doc);
nlohmann::json RunConfigToJson(const RunConfig& cfg);
Hyperparameters ParseHyperparameters(const nlohmann::json& doc);
nlohmann::json HyperparametersToJson(const Hyperparameters& hp);
SweepConfig ParseSweepConfig(const nlohmann::json& doc);
SyntheticConfig ParseSyntheticConfig(const nlohmann::json& doc);

// Reads and parses a JSON file; parse failures are ConfigError.
nlohmann::json ReadJsonFile(const std::filesystem::path& path);

}  // namespace qcota

#endif  // QCOTA_DATA_H_
