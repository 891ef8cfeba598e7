// Copyright 2026 The mirrorgate Authors
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

#pragma once

// Run configuration: one JSON document per run, validated against the domain
// invariants before anything is computed.
//
//   {
//     "units": "k0_units",              // "SI" for working-condition
//     "regime": {"n": 1, "n_prime": 0, "k0": 1.0},
//     "geometry": {"x2": 3.14, "x3": 4.71},          // optional override
//     "model": {"type": "massive", "mass": 1.0, "gamma": 1000.0},
//     "k": 1.0,
//     "sweep": {"lo": 0.8, "hi": 1.2, "samples": 401},
//     "packet": {"dk": 0.05, "x0_widths": -8.0},      // or "x0"
//     "snapshots": 11,                                // or "times": [...]
//     "quadrature": {"nodes": 401, "half_width": 6.0},
//     "material": "gaas",              // or {"velocity": .., "wavelength": ..}
//     "equivalence": {"k_lo": 0.6, "k_hi": 1.4, "points": 101},
//     "timestamp": "2026-01-01T00:00:00Z"
//   }
//
// Every key is optional; unknown keys are rejected.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mirrorgate/gate_analysis.hpp"
#include "mirrorgate/photonic.hpp"
#include "mirrorgate/types.hpp"
#include "mirrorgate/wavepacket.hpp"

namespace mirrorgate::cli {

class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

enum class Units { kK0, kSI };

struct WorkingConditionInput {
  std::string name;
  double refractive_index = 0.0;  // 0 for a custom velocity
  double velocity = 0.0;          // m/s
  double wavelength = 0.0;        // m
};

struct RunConfig {
  std::string command;
  Units units = Units::kK0;
  gate::CZRegime regime{1, 0, 1.0};
  std::optional<Geometry> geometry_override;
  CouplingModel model = CouplingModel::massive_with_gamma(1000.0, 1.0);
  bool model_given = false;
  std::optional<double> gamma;  // strength at k0, when given explicitly
  std::optional<double> k;

  double sweep_lo = 0.8;
  double sweep_hi = 1.2;
  int sweep_samples = 401;

  wavepacket::GaussianPacket packet{-80.0, 1.0, 0.05};
  std::vector<double> times;  // empty: `snapshots` points on [0, T]
  int snapshots = 11;
  wavepacket::QuadratureSpec quadrature;

  std::vector<WorkingConditionInput> materials;

  photonic::LambdaAtomParams atoms{1.0, 0.95, 1.0};
  std::vector<double> k_grid;

  std::string timestamp = "unspecified";

  Geometry geometry() const {
    return geometry_override ? *geometry_override : regime.geometry();
  }
};

/// Flag values that override the document.
struct Overrides {
  std::optional<int> samples;
  std::optional<double> gamma;
  std::optional<std::pair<int, int>> regime;
};

/// "n,n'" -> (n, n'). Throws ConfigError.
std::pair<int, int> parse_regime_flag(const std::string& text);

/// Reads and parses a JSON file. Throws ConfigError.
nlohmann::json load_config_file(const std::string& path);

/// Writes the overrides into the document where `command` reads them.
void apply_overrides(nlohmann::json& doc, const std::string& command,
                     const Overrides& overrides);

/// Validated configuration for `command`. Throws ConfigError (or another
/// InvalidArgument from a domain constructor) on any violation.
RunConfig parse_config(const nlohmann::json& doc, const std::string& command);

}  // namespace mirrorgate::cli
