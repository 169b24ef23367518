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

#include "qcota/data.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

#include "qcota/errors.h"

namespace qcota {
namespace {

constexpr double kEarthRadiusKm = 6371.0088;
constexpr double kMaxMissingFraction = 0.20;

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(Trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

struct CsvFile {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;
};

CsvFile ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  CsvFile csv;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    if (csv.header.empty()) {
      csv.header = SplitCsv(line);
      continue;
    }
    csv.rows.push_back(SplitCsv(line));
    csv.line_numbers.push_back(line_number);
  }
  if (csv.header.empty()) throw DataError(path.string() + ": empty file");
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    if (csv.rows[i].size() != csv.header.size()) {
      throw DataError(path.string() + ":" +
                      std::to_string(csv.line_numbers[i]) +
                      ": expected " + std::to_string(csv.header.size()) +
                      " fields");
    }
  }
  return csv;
}

double ParseDouble(const std::string& s, const std::string& where) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw DataError(where + ": not a finite number: '" + s + "'");
  }
  return v;
}

long ParseInt(const std::string& s, const std::string& where) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw DataError(where + ": not an integer: '" + s + "'");
  }
  return v;
}

std::string Location(const std::filesystem::path& path, int line) {
  return path.filename().string() + ":" + std::to_string(line);
}

std::string FormatExact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CheckKeys(const nlohmann::json& doc, std::initializer_list<const char*> allowed,
               const std::string& context) {
  if (!doc.is_object()) throw ConfigError(context + " must be a JSON object");
  for (const auto& item : doc.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw ConfigError("unknown key '" + item.key() + "' in " + context);
  }
}

template <typename T>
T Get(const nlohmann::json& doc, const char* key, const std::string& context) {
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(context + "." + key + ": " + e.what());
  }
}

template <typename T>
void GetIfPresent(const nlohmann::json& doc, const char* key, T& out,
                  const std::string& context) {
  if (doc.contains(key)) out = Get<T>(doc, key, context);
}

}  // namespace

void ValidateDataset(const Dataset& dataset) {
  const ValueCube& rs = dataset.truth;
  if (rs.attributes() < 1) throw DataError("dataset needs at least 1 attribute");
  if (rs.cells() < 1) throw DataError("dataset needs at least 1 cell");
  if (rs.cycles() < 2) throw DataError("dataset needs at least 2 cycles");
  if (rs.cells() != dataset.geometry.num_cells()) {
    throw DataError("truth has " + std::to_string(rs.cells()) +
                    " cells but geometry has " +
                    std::to_string(dataset.geometry.num_cells()));
  }
  if (static_cast<int>(dataset.attribute_names.size()) != rs.attributes()) {
    throw DataError("attribute name count does not match truth");
  }
  for (int a = 0; a < rs.attributes(); ++a) {
    for (int x = 0; x < rs.cells(); ++x) {
      for (double v : rs.Series(a, x)) {
        if (!std::isfinite(v)) throw DataError("non-finite ground truth value");
      }
    }
  }
}

Dataset SelectAttributes(const Dataset& dataset, const std::vector<int>& keep) {
  Dataset out;
  out.geometry = dataset.geometry;
  out.truth = ValueCube(static_cast<int>(keep.size()), dataset.num_cells(),
                        dataset.num_cycles());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int a = keep[i];
    if (a < 0 || a >= dataset.num_attributes()) {
      throw ConfigError("attribute index " + std::to_string(a) +
                        " out of range");
    }
    out.attribute_names.push_back(dataset.attribute_names[a]);
    for (int x = 0; x < dataset.num_cells(); ++x) {
      std::ranges::copy(dataset.truth.Series(a, x),
                        out.truth.Series(static_cast<int>(i), x).begin());
    }
  }
  return out;
}

GridGeometry LoadStations(const std::filesystem::path& path) {
  const CsvFile csv = ReadCsv(path);
  const std::vector<std::string> km = {"cell_id", "x_km", "y_km"};
  const std::vector<std::string> geo = {"cell_id", "lat", "lon"};
  const bool is_geo = csv.header == geo;
  if (csv.header != km && !is_geo) {
    throw DataError(path.string() +
                    ": header must be cell_id,x_km,y_km or cell_id,lat,lon");
  }
  std::vector<Cell> cells;
  std::vector<std::pair<double, double>> raw;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const std::string where = Location(path, csv.line_numbers[i]);
    const auto& row = csv.rows[i];
    cells.push_back({static_cast<CellId>(ParseInt(row[0], where)), 0.0, 0.0});
    raw.emplace_back(ParseDouble(row[1], where), ParseDouble(row[2], where));
  }
  if (cells.empty()) throw DataError(path.string() + ": no stations");
  if (is_geo) {
    double lat0 = 0.0;
    double lon0 = 0.0;
    for (const auto& [lat, lon] : raw) {
      lat0 += lat;
      lon0 += lon;
    }
    lat0 /= static_cast<double>(raw.size());
    lon0 /= static_cast<double>(raw.size());
    const double rad = std::numbers::pi / 180.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      cells[i].x_km = kEarthRadiusKm * (raw[i].second - lon0) * rad *
                      std::cos(lat0 * rad);
      cells[i].y_km = kEarthRadiusKm * (raw[i].first - lat0) * rad;
    }
  } else {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      cells[i].x_km = raw[i].first;
      cells[i].y_km = raw[i].second;
    }
  }
  try {
    return GridGeometry(std::move(cells));
  } catch (const DomainError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

LoadedDataset LoadDataset(const std::filesystem::path& measurements_path,
                          const std::filesystem::path& stations_path) {
  LoadedDataset out;
  out.dataset.geometry = LoadStations(stations_path);
  const int num_cells = out.dataset.geometry.num_cells();

  const CsvFile csv = ReadCsv(measurements_path);
  if (csv.header != std::vector<std::string>{"cycle", "cell_id", "attribute",
                                             "value"}) {
    throw DataError(measurements_path.string() +
                    ": header must be cycle,cell_id,attribute,value");
  }
  std::map<std::string, int> attribute_index;
  std::map<std::tuple<int, int, int>, double> values;  // (a, x, y)
  int max_cycle = -1;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const std::string where = Location(measurements_path, csv.line_numbers[i]);
    const auto& row = csv.rows[i];
    const long cycle = ParseInt(row[0], where);
    const long cell = ParseInt(row[1], where);
    if (cycle < 0) throw DataError(where + ": negative cycle");
    if (cell < 0 || cell >= num_cells) {
      throw DataError(where + ": unknown cell_id " + row[1]);
    }
    if (row[2].empty()) throw DataError(where + ": empty attribute name");
    const double value = ParseDouble(row[3], where);
    auto [it, inserted] = attribute_index.try_emplace(
        row[2], static_cast<int>(attribute_index.size()));
    if (inserted) out.dataset.attribute_names.push_back(row[2]);
    auto key = std::make_tuple(it->second, static_cast<int>(cell),
                               static_cast<int>(cycle));
    auto [vit, fresh] = values.insert_or_assign(key, value);
    (void)vit;
    if (!fresh) ++out.report.duplicate_rows;
    max_cycle = std::max(max_cycle, static_cast<int>(cycle));
  }
  if (values.empty()) throw DataError(measurements_path.string() + ": no rows");

  const int num_attributes = static_cast<int>(attribute_index.size());
  const int num_cycles = max_cycle + 1;
  out.dataset.truth = ValueCube(num_attributes, num_cells, num_cycles);
  for (int a = 0; a < num_attributes; ++a) {
    int missing = 0;
    for (int x = 0; x < num_cells; ++x) {
      std::vector<int> known;
      for (int y = 0; y < num_cycles; ++y) {
        if (values.count({a, x, y})) known.push_back(y);
      }
      if (known.empty()) {
        throw DataError("attribute '" + out.dataset.attribute_names[a] +
                        "' has no values at cell " + std::to_string(x));
      }
      auto series = out.dataset.truth.Series(a, x);
      std::size_t next = 0;
      for (int y = 0; y < num_cycles; ++y) {
        while (next < known.size() && known[next] < y) ++next;
        if (next < known.size() && known[next] == y) {
          series[y] = values.at({a, x, y});
          continue;
        }
        ++missing;
        if (next == 0) {
          series[y] = values.at({a, x, known.front()});
        } else if (next == known.size()) {
          series[y] = values.at({a, x, known.back()});
        } else {
          const int y0 = known[next - 1];
          const int y1 = known[next];
          const double v0 = values.at({a, x, y0});
          const double v1 = values.at({a, x, y1});
          series[y] = v0 + (v1 - v0) * (y - y0) / static_cast<double>(y1 - y0);
        }
      }
    }
    const double fraction =
        static_cast<double>(missing) / (static_cast<double>(num_cells) * num_cycles);
    if (fraction > kMaxMissingFraction) {
      throw DataError("attribute '" + out.dataset.attribute_names[a] +
                      "' is missing " + std::to_string(100.0 * fraction) +
                      "% of (cell, cycle) entries");
    }
    out.report.interpolated_entries += missing;
  }
  if (out.report.duplicate_rows > 0) {
    out.report.warnings.push_back(std::to_string(out.report.duplicate_rows) +
                                  " duplicate rows; last value kept");
  }
  if (out.report.interpolated_entries > 0) {
    out.report.warnings.push_back(
        std::to_string(out.report.interpolated_entries) +
        " missing entries filled by linear interpolation in time");
  }
  ValidateDataset(out.dataset);
  return out;
}

void WriteDataset(const Dataset& dataset,
                  const std::filesystem::path& measurements_path,
                  const std::filesystem::path& stations_path) {
  std::ofstream stations(stations_path);
  if (!stations) throw DataError("cannot write " + stations_path.string());
  stations << "cell_id,x_km,y_km\n";
  for (const Cell& c : dataset.geometry.cells()) {
    stations << c.id << ',' << FormatExact(c.x_km) << ',' << FormatExact(c.y_km)
             << '\n';
  }
  std::ofstream meas(measurements_path);
  if (!meas) throw DataError("cannot write " + measurements_path.string());
  meas << "cycle,cell_id,attribute,value\n";
  for (int y = 0; y < dataset.num_cycles(); ++y) {
    for (int x = 0; x < dataset.num_cells(); ++x) {
      for (int a = 0; a < dataset.num_attributes(); ++a) {
        meas << y << ',' << x << ',' << dataset.attribute_names[a] << ','
             << FormatExact(dataset.truth.at(a, x, y)) << '\n';
      }
    }
  }
}

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kQcoTa: return "QCO-TA";
    case Scheme::kOoMta: return "OO-MTA";
    case Scheme::kGpsTa: return "GPS-TA";
    case Scheme::kEwaTa: return "EWA-TA";
    case Scheme::kUnsTa: return "UNS-TA";
  }
  return "?";
}

std::string_view InferenceName(InferenceKind kind) {
  switch (kind) {
    case InferenceKind::kKnn: return "KNN";
    case InferenceKind::kIdw: return "IDW";
    case InferenceKind::kSvr: return "SVR";
  }
  return "?";
}

const std::vector<Scheme>& AllSchemes() {
  static const std::vector<Scheme> kAll = {Scheme::kQcoTa, Scheme::kOoMta,
                                           Scheme::kGpsTa, Scheme::kEwaTa,
                                           Scheme::kUnsTa};
  return kAll;
}

Scheme ParseScheme(std::string_view name) {
  for (Scheme s : AllSchemes()) {
    if (SchemeName(s) == name) return s;
  }
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

InferenceKind ParseInference(std::string_view name) {
  for (InferenceKind k :
       {InferenceKind::kKnn, InferenceKind::kIdw, InferenceKind::kSvr}) {
    if (InferenceName(k) == name) return k;
  }
  throw ConfigError("unknown inference '" + std::string(name) + "'");
}

void ValidateRunConfig(const RunConfig& cfg) {
  const Hyperparameters& hp = cfg.hyperparameters;
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  require(cfg.participants >= 1, "P must be at least 1");
  require(hp.alpha_te >= 0.0 && hp.alpha_smi >= 0.0, "alpha weights must be >= 0");
  require(hp.eta >= 0.0 && std::isfinite(hp.eta), "eta must be finite and >= 0");
  require(hp.delta > 0.5 && hp.delta < 1.0, "delta must lie in (0.5, 1)");
  require(hp.beta > 0.0 && hp.beta < 1.0, "beta must lie in (0, 1)");
  require(hp.theta_conv > 0.0, "theta_conv must be > 0");
  require(hp.gamma >= 0.0 && std::isfinite(hp.gamma), "gamma must be finite and >= 0");
  require(hp.k_knn >= 1, "k_knn must be >= 1");
  require(hp.n_idw >= 1, "n_idw must be >= 1");
  require(!hp.d_floor_km || *hp.d_floor_km > 0.0, "d_floor_km must be > 0");
  require(hp.cost_per_km > 0.0, "cost_per_km must be > 0");
  require(hp.entropy_window >= 0, "entropy_window must be >= 0");
  std::set<int> seen;
  for (int a : cfg.attributes_used) {
    require(a >= 0, "A_used entries must be >= 0");
    require(seen.insert(a).second, "A_used has duplicate entries");
  }
}

std::vector<int> ResolvedAttributes(const RunConfig& cfg, int num_attributes) {
  if (!cfg.attributes_used.empty()) return cfg.attributes_used;
  std::vector<int> all(num_attributes);
  for (int a = 0; a < num_attributes; ++a) all[a] = a;
  return all;
}

void ValidateRunConfigFor(const RunConfig& cfg, const Dataset& dataset) {
  ValidateRunConfig(cfg);
  const int x = dataset.num_cells();
  if (cfg.participants >= x) {
    throw ConfigError("P = " + std::to_string(cfg.participants) +
                      " must be smaller than the cell count X = " +
                      std::to_string(x));
  }
  const std::vector<int> attrs = ResolvedAttributes(cfg, dataset.num_attributes());
  for (int a : attrs) {
    if (a >= dataset.num_attributes()) {
      throw ConfigError("A_used references attribute " + std::to_string(a) +
                        " but the dataset has " +
                        std::to_string(dataset.num_attributes()));
    }
  }
  if (cfg.scheme == Scheme::kGpsTa &&
      cfg.participants < static_cast<int>(attrs.size())) {
    throw ConfigError("GPS-TA needs P >= number of attributes");
  }
}

Hyperparameters ParseHyperparameters(const nlohmann::json& doc) {
  const std::string ctx = "hyperparameters";
  CheckKeys(doc,
            {"alpha_TE", "alpha_SMI", "eta", "delta", "gamma", "beta",
             "theta_conv", "k_knn", "n_idw", "d_floor_km", "cost_per_km",
             "entropy_window", "raw_priority_scale"},
            ctx);
  Hyperparameters hp;
  GetIfPresent(doc, "alpha_TE", hp.alpha_te, ctx);
  GetIfPresent(doc, "alpha_SMI", hp.alpha_smi, ctx);
  GetIfPresent(doc, "eta", hp.eta, ctx);
  GetIfPresent(doc, "delta", hp.delta, ctx);
  GetIfPresent(doc, "gamma", hp.gamma, ctx);
  GetIfPresent(doc, "beta", hp.beta, ctx);
  GetIfPresent(doc, "theta_conv", hp.theta_conv, ctx);
  GetIfPresent(doc, "k_knn", hp.k_knn, ctx);
  GetIfPresent(doc, "n_idw", hp.n_idw, ctx);
  if (doc.contains("d_floor_km") && !doc.at("d_floor_km").is_null()) {
    hp.d_floor_km = Get<double>(doc, "d_floor_km", ctx);
  }
  GetIfPresent(doc, "cost_per_km", hp.cost_per_km, ctx);
  GetIfPresent(doc, "entropy_window", hp.entropy_window, ctx);
  GetIfPresent(doc, "raw_priority_scale", hp.raw_priority_scale, ctx);
  return hp;
}

nlohmann::json HyperparametersToJson(const Hyperparameters& hp) {
  nlohmann::json doc = {
      {"alpha_TE", hp.alpha_te},       {"alpha_SMI", hp.alpha_smi},
      {"eta", hp.eta},                 {"delta", hp.delta},
      {"gamma", hp.gamma},             {"beta", hp.beta},
      {"theta_conv", hp.theta_conv},   {"k_knn", hp.k_knn},
      {"n_idw", hp.n_idw},             {"cost_per_km", hp.cost_per_km},
      {"entropy_window", hp.entropy_window},
      {"raw_priority_scale", hp.raw_priority_scale}};
  doc["d_floor_km"] = hp.d_floor_km ? nlohmann::json(*hp.d_floor_km)
                                    : nlohmann::json(nullptr);
  return doc;
}

namespace {

std::vector<int> ParseAttributesUsed(const nlohmann::json& value) {
  std::vector<int> out;
  try {
    if (value.is_number_integer()) {
      const int n = value.get<int>();
      if (n < 1) throw ConfigError("A_used count must be >= 1");
      for (int a = 0; a < n; ++a) out.push_back(a);
    } else {
      out = value.get<std::vector<int>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("A_used: ") + e.what());
  }
  return out;
}

}  // namespace

RunConfig ParseRunConfig(const nlohmann::json& doc) {
  const std::string ctx = "run config";
  CheckKeys(doc,
            {"scheme", "inference", "P", "A_used", "hyperparameters", "seed",
             "literal_bellman"},
            ctx);
  RunConfig cfg;
  if (doc.contains("scheme")) cfg.scheme = ParseScheme(Get<std::string>(doc, "scheme", ctx));
  if (doc.contains("inference")) {
    cfg.inference = ParseInference(Get<std::string>(doc, "inference", ctx));
  }
  GetIfPresent(doc, "P", cfg.participants, ctx);
  if (doc.contains("A_used")) cfg.attributes_used = ParseAttributesUsed(doc.at("A_used"));
  if (doc.contains("hyperparameters")) {
    cfg.hyperparameters = ParseHyperparameters(doc.at("hyperparameters"));
  }
  GetIfPresent(doc, "seed", cfg.seed, ctx);
  GetIfPresent(doc, "literal_bellman", cfg.literal_bellman, ctx);
  ValidateRunConfig(cfg);
  return cfg;
}

nlohmann::json RunConfigToJson(const RunConfig& cfg) {
  return {{"scheme", SchemeName(cfg.scheme)},
          {"inference", InferenceName(cfg.inference)},
          {"P", cfg.participants},
          {"A_used", cfg.attributes_used},
          {"hyperparameters", HyperparametersToJson(cfg.hyperparameters)},
          {"seed", cfg.seed},
          {"literal_bellman", cfg.literal_bellman}};
}

SweepConfig ParseSweepConfig(const nlohmann::json& doc) {
  const std::string ctx = "sweep config";
  CheckKeys(doc,
            {"schemes", "inferences", "participants", "attributes", "repeats",
             "seed", "hyperparameters", "literal_bellman"},
            ctx);
  SweepConfig sweep;
  sweep.schemes = AllSchemes();
  sweep.inferences = {InferenceKind::kKnn, InferenceKind::kIdw,
                      InferenceKind::kSvr};
  sweep.participants = {8, 10, 12, 14};
  sweep.attribute_counts = {2, 3, 4};
  if (doc.contains("schemes")) {
    sweep.schemes.clear();
    for (const auto& s : Get<std::vector<std::string>>(doc, "schemes", ctx)) {
      sweep.schemes.push_back(ParseScheme(s));
    }
  }
  if (doc.contains("inferences")) {
    sweep.inferences.clear();
    for (const auto& s : Get<std::vector<std::string>>(doc, "inferences", ctx)) {
      sweep.inferences.push_back(ParseInference(s));
    }
  }
  GetIfPresent(doc, "participants", sweep.participants, ctx);
  GetIfPresent(doc, "attributes", sweep.attribute_counts, ctx);
  GetIfPresent(doc, "repeats", sweep.repeats, ctx);
  GetIfPresent(doc, "seed", sweep.seed, ctx);
  GetIfPresent(doc, "literal_bellman", sweep.literal_bellman, ctx);
  if (doc.contains("hyperparameters")) {
    sweep.hyperparameters = ParseHyperparameters(doc.at("hyperparameters"));
  }
  if (sweep.repeats < 1) throw ConfigError("repeats must be >= 1");
  if (sweep.schemes.empty() || sweep.inferences.empty() ||
      sweep.participants.empty() || sweep.attribute_counts.empty()) {
    throw ConfigError("sweep grid has an empty axis");
  }
  for (int n : sweep.attribute_counts) {
    if (n < 1) throw ConfigError("attribute counts must be >= 1");
  }
  return sweep;
}

SyntheticConfig ParseSyntheticConfig(const nlohmann::json& doc) {
  const std::string ctx = "synthetic config";
  CheckKeys(doc,
            {"X", "Y", "A", "spatial_length_scale_km", "temporal_correlation",
             "cross_attribute_correlation", "noise_sd", "seed",
             "region_width_km", "region_height_km"},
            ctx);
  SyntheticConfig cfg;
  GetIfPresent(doc, "X", cfg.cells, ctx);
  GetIfPresent(doc, "Y", cfg.cycles, ctx);
  GetIfPresent(doc, "A", cfg.attributes, ctx);
  GetIfPresent(doc, "spatial_length_scale_km", cfg.spatial_length_scale_km, ctx);
  GetIfPresent(doc, "temporal_correlation", cfg.temporal_correlation, ctx);
  GetIfPresent(doc, "cross_attribute_correlation",
               cfg.cross_attribute_correlation, ctx);
  GetIfPresent(doc, "noise_sd", cfg.noise_sd, ctx);
  GetIfPresent(doc, "seed", cfg.seed, ctx);
  GetIfPresent(doc, "region_width_km", cfg.region_width_km, ctx);
  GetIfPresent(doc, "region_height_km", cfg.region_height_km, ctx);
  ValidateSyntheticConfig(cfg);
  return cfg;
}

nlohmann::json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace qcota
