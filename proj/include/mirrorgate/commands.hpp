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

// Subcommand implementations. The *_table / *_run functions compute and return
// data without touching the filesystem; `run` adds config loading, output
// writing and exit codes.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mirrorgate/config.hpp"
#include "mirrorgate/photonic.hpp"
#include "mirrorgate/sweep_table.hpp"

namespace mirrorgate::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidConfig = 2,
  kExitNumericalFailure = 3,
  kExitThresholdFailure = 4,
};

enum class Format { kCsv, kJson };

SweepTable solve_table(const RunConfig& cfg);
SweepTable gate_table(const RunConfig& cfg);

struct SweepResult {
  SweepTable table;
  double window_half_width = 0.0;
  double max_route_difference = 0.0;  // max |F_closed - F_chi|
};
SweepResult fidelity_sweep_run(const RunConfig& cfg);

struct WavepacketResult {
  std::vector<SweepTable> snapshots;  // one per time
  nlohmann::ordered_json summary;
};
WavepacketResult wavepacket_run(const RunConfig& cfg);

SweepTable duration_table(const RunConfig& cfg);
SweepTable working_condition_table(const RunConfig& cfg);

struct EquivalenceResult {
  SweepTable table;
  photonic::EquivalenceReport report;
};
EquivalenceResult equivalence_run(const RunConfig& cfg);

struct Invocation {
  std::string command;
  std::optional<std::string> config_path;
  std::optional<std::string> out;  // wavepacket: output directory
  Format format = Format::kCsv;
  Overrides overrides;
};

/// Runs one subcommand. Data goes to the `--out` file when given, otherwise
/// to `out`. The one-line summary goes to whichever of `out` / `err` is not
/// carrying data; errors go to `err`. Files are written only after every
/// computation succeeded.
int run(const Invocation& invocation, std::ostream& out, std::ostream& err);

}  // namespace mirrorgate::cli
