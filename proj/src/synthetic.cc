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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "qcota/data.h"
#include "qcota/errors.h"

namespace qcota {
namespace {

struct AttributeStyle {
  const char* name;
  double offset;
  double scale;
};

constexpr std::array<AttributeStyle, 4> kStyles = {{
    {"wind_speed", 3.0, 1.0},
    {"temperature", 12.0, 5.0},
    {"primary_aerosol", 5.0, 2.0},
    {"pm10", 40.0, 15.0},
}};

// Square-root factor of the A x A equicorrelation matrix.
Eigen::MatrixXd EquicorrelationFactor(int attributes, double rho) {
  Eigen::MatrixXd corr = Eigen::MatrixXd::Constant(attributes, attributes, rho);
  corr.diagonal().setOnes();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(corr);
  if (eig.eigenvalues().minCoeff() < -1e-12) {
    throw ConfigError("cross_attribute_correlation " + std::to_string(rho) +
                      " is infeasible for " + std::to_string(attributes) +
                      " attributes (needs rho >= -1/(A-1))");
  }
  const Eigen::VectorXd roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * roots.asDiagonal();
}

}  // namespace

void ValidateSyntheticConfig(const SyntheticConfig& cfg) {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  require(cfg.cells >= 2, "synthetic X must be >= 2");
  require(cfg.cycles >= 2, "synthetic Y must be >= 2");
  require(cfg.attributes >= 1, "synthetic A must be >= 1");
  require(cfg.spatial_length_scale_km > 0.0, "spatial_length_scale_km must be > 0");
  require(cfg.temporal_correlation >= 0.0 && cfg.temporal_correlation < 1.0,
          "temporal_correlation must lie in [0, 1)");
  require(cfg.cross_attribute_correlation >= -1.0 &&
              cfg.cross_attribute_correlation <= 1.0,
          "cross_attribute_correlation must lie in [-1, 1]");
  require(cfg.noise_sd >= 0.0, "noise_sd must be >= 0");
  require(cfg.region_width_km > 0.0 && cfg.region_height_km > 0.0,
          "region extent must be positive");
}

Dataset GenerateSynthetic(const SyntheticConfig& cfg) {
  ValidateSyntheticConfig(cfg);
  const int num_x = cfg.cells;
  const int num_y = cfg.cycles;
  const int num_a = cfg.attributes;
  const Eigen::MatrixXd mixing =
      EquicorrelationFactor(num_a, cfg.cross_attribute_correlation);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> ux(0.0, cfg.region_width_km);
  std::uniform_real_distribution<double> uy(0.0, cfg.region_height_km);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<Cell> cells(num_x);
  for (int x = 0; x < num_x; ++x) {
    cells[x].id = x;
    cells[x].x_km = ux(rng);
    cells[x].y_km = uy(rng);
  }
  Dataset out;
  out.geometry = GridGeometry(cells);

  // Rows scaled to unit norm so each mixed cell keeps unit variance.
  const double two_l2 = 2.0 * cfg.spatial_length_scale_km *
                        cfg.spatial_length_scale_km;
  Eigen::MatrixXd kernel(num_x, num_x);
  for (int i = 0; i < num_x; ++i) {
    for (int j = 0; j < num_x; ++j) {
      const double d = out.geometry.Distance(i, j);
      kernel(i, j) = std::exp(-d * d / two_l2);
    }
    kernel.row(i) /= kernel.row(i).norm();
  }

  const double phi = cfg.temporal_correlation;
  const double innovation = std::sqrt(1.0 - phi * phi);
  // sources[k] is X x Y.
  std::vector<Eigen::MatrixXd> sources;
  for (int k = 0; k < num_a; ++k) {
    Eigen::MatrixXd latent(num_x, num_y);
    for (int j = 0; j < num_x; ++j) {
      latent(j, 0) = normal(rng);
      for (int t = 1; t < num_y; ++t) {
        latent(j, t) = phi * latent(j, t - 1) + innovation * normal(rng);
      }
    }
    sources.push_back(kernel * latent);
  }

  out.truth = ValueCube(num_a, num_x, num_y);
  for (int a = 0; a < num_a; ++a) {
    const AttributeStyle style =
        a < static_cast<int>(kStyles.size())
            ? kStyles[a]
            : AttributeStyle{nullptr, 10.0, 1.0};
    out.attribute_names.push_back(style.name ? std::string(style.name)
                                             : "attribute_" + std::to_string(a));
    Eigen::MatrixXd field = Eigen::MatrixXd::Zero(num_x, num_y);
    for (int k = 0; k < num_a; ++k) field += mixing(a, k) * sources[k];
    for (int x = 0; x < num_x; ++x) {
      for (int t = 0; t < num_y; ++t) {
        const double noise = cfg.noise_sd > 0.0 ? cfg.noise_sd * normal(rng) : 0.0;
        out.truth.at(a, x, t) = style.offset + style.scale * (field(x, t) + noise);
      }
    }
  }
  return out;
}

}  // namespace qcota
