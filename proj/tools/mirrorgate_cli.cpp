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

// mirrorgate command-line interface.
//
//   mirrorgate <command> [--config FILE] [--out PATH] [--format csv|json]
//              [--samples N] [--gamma G] [--regime n,n']
//
// Exit codes: 0 success, 2 invalid config, 3 numerical failure,
// 4 equivalence threshold not met.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mirrorgate/commands.hpp"

namespace {

using mirrorgate::cli::Format;
using mirrorgate::cli::Invocation;

const std::map<std::string, std::string> kCommands = {
    {"solve", "stationary reflection amplitudes for all four configurations"},
    {"gate", "reflection gate at k, phase-stripped and compared with CZ"},
    {"fidelity-sweep", "gate fidelity against k/k0 (closed form, chi route, finite gamma)"},
    {"wavepacket", "Gaussian packet evolution: snapshots and summary"},
    {"duration", "characteristic and minimum gate durations"},
    {"working-condition", "decoherence-time bound 10/(v k0) in SI units"},
    {"equivalence", "photonic vs massive reflection amplitudes on a k grid"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mirrorgate: mirror-assisted scattering CZ gate simulator"};
  app.require_subcommand(1);

  Invocation inv;
  std::string config, out, format = "csv", regime;
  int samples = 0;
  double gamma = 0.0;

  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output file (wavepacket: output directory)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--samples", samples, "sweep samples / snapshots / grid points");
    sub->add_option("--gamma", gamma, "dimensionless strength at k0");
    sub->add_option("--regime", regime, "CZ regime n,n'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mirrorgate::cli::kExitInvalidConfig;
  }

  const CLI::App* sub = app.get_subcommands().front();
  inv.command = sub->get_name();
  if (sub->count("--config")) inv.config_path = config;
  if (sub->count("--out")) inv.out = out;
  inv.format = format == "json" ? Format::kJson : Format::kCsv;
  try {
    if (sub->count("--samples")) inv.overrides.samples = samples;
    if (sub->count("--gamma")) inv.overrides.gamma = gamma;
    if (sub->count("--regime")) {
      inv.overrides.regime = mirrorgate::cli::parse_regime_flag(regime);
    }
  } catch (const mirrorgate::cli::ConfigError& e) {
    std::cerr << "error: invalid config: " << e.what() << "\n";
    return mirrorgate::cli::kExitInvalidConfig;
  }
  return mirrorgate::cli::run(inv, std::cout, std::cerr);
}
