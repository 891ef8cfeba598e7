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

// Acceptance checks, one line per criterion. Usage: acceptance [path/to/mirrorgate]
// Without the CLI path the determinism check runs the commands in-process.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mirrorgate/commands.hpp"
#include "mirrorgate/gate_analysis.hpp"
#include "mirrorgate/photonic.hpp"
#include "mirrorgate/scattering.hpp"
#include "mirrorgate/wavepacket.hpp"

using namespace mirrorgate;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::mt19937_64 rng(7);
double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

void unitarity() {
  const auto t0 = Clock::now();
  const int draws = 2000;
  double solver = 0.0, closed = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double x2 = uniform(0.1, 10.0);
    const Geometry g(x2, x2 + uniform(0.1, 10.0));
    const double gamma = uniform(0.0, 1e3);
    const Wavevector k(uniform(0.05, 5.0));
    const SpinConfig c = SpinConfig::from_index(i % 4);
    solver = std::max(solver, std::abs(std::abs(solve_for_strength(c, gamma, g, k).r) - 1.0));
    closed = std::max(
        closed, std::abs(std::abs(reflection_amplitude_closed_form(c, gamma, g, k)) - 1.0));
  }
  const double t = seconds_since(t0);
  const bool ok = solver < 1e-10 && closed <= 2.3e-16 && t < 10.0;
  report(1, "unitarity", ok,
         std::to_string(draws) + " draws, max ||r|-1| solver " + fmt("%.2e", solver) +
             ", closed form " + fmt("%.2e", closed) + ", " + fmt("%.2f s", t));
}

void completeness() {
  const int draws = 2000;
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double k0 = uniform(0.05, 5.0);
    const CouplingModel m = CouplingModel::massive_with_gamma(uniform(0.0, 1e3), k0);
    worst = std::max(worst,
                     open_line_operators(m, uniform(0.1, 10.0), Wavevector(k0)).completeness_defect());
  }
  report(2, "open-line completeness", worst < 1e-12,
         std::to_string(draws) + " draws, max |RR^+ + TT^+ - 1| = " + fmt("%.2e", worst));
}

void cz_reproduction() {
  const gate::CZRegime r = gate::cz_regime(1, 0, 1.0);
  const gate::Matrix4 cz = gate::cz_gate();
  auto deviation = [&](double gamma) {
    const auto s = reflection_gate_for_strength(gamma, r.geometry(), Wavevector(r.k0)).phase_stripped();
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(s[i] - cz(i, i)));
    return d;
  };
  const double d2 = deviation(1e2), d3 = deviation(1e3), d4 = deviation(1e4);
  const bool ok = d3 < 1e-2 && d2 > d3 && d3 > d4;
  report(3, "CZ reproduction", ok,
         "max |stripped - CZ| at gamma 1e2/1e3/1e4 = " + fmt("%.2e", d2) + " / " +
             fmt("%.2e", d3) + " / " + fmt("%.2e", d4));
}

void fidelity_formula() {
  const gate::CZRegime r = gate::cz_regime(1, 0, 1.0);
  const Geometry g = r.geometry();
  const gate::ProcessMatrix chi_cz = gate::pauli_chi(gate::cz_gate());
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double k = 0.6 + 0.8 * i / 400.0;
    const double chi = gate::chi_overlap(chi_cz, gate::pauli_chi(gate::ideal_gate_limit(k, g).matrix()));
    worst = std::max(worst, std::abs(chi - gate::fidelity_closed_form(k, g)));
  }
  const double f0 = gate::fidelity_closed_form(1.0, g);
  const double f105 = gate::fidelity_closed_form(1.05, g);
  const double window = gate::fidelity_sweep(r, 0.8, 1.2, 401).window_half_width;
  const bool ok = worst < 1e-12 && std::abs(f0 - 1.0) < 1e-15 &&
                  std::abs(f105 - 0.959) <= 1e-3 && window >= 0.05;
  report(4, "fidelity formula", ok,
         "max |F_chi - F_closed| " + fmt("%.2e", worst) + ", F(k0) " + fmt("%.15f", f0) +
             ", F(1.05 k0) " + fmt("%.5f", f105) + ", window half-width " + fmt("%.3f", window));
}

void equivalence() {
  const photonic::LambdaAtomParams p(1.0, 1.0, 1.0);
  const Geometry g = gate::cz_regime(1, 0, 1.0).geometry();
  std::vector<double> k_grid;
  for (int j = 0; j < 101; ++j) k_grid.push_back(p.omega0 / p.velocity - 0.495 + 0.01 * j);
  const photonic::EquivalenceReport rep = photonic::verify_equivalence(p, g, k_grid);
  report(5, "setup A/B equivalence", rep.passed && rep.points == 404,
         "101 detunings x 4 configurations, max |r_photonic - r_massive| = " +
             fmt("%.2e", rep.max_deviation));
}

void wavepacket_suite() {
  const auto t0 = Clock::now();
  const gate::CZRegime r = gate::cz_regime(1, 0, 1.0);
  const Geometry g = r.geometry();
  const CouplingModel m = CouplingModel::massive_with_gamma(1e3, 1.0);
  const wavepacket::GaussianPacket p(-80.0, 1.0, 0.05);
  const double t_end = wavepacket::scattering_complete_time(p, m, g);
  std::vector<double> times;
  for (int i = 0; i <= 20; ++i) times.push_back(t_end * i / 20.0);

  double l2 = 0.0, drift = 0.0, wall = 0.0;
  for (const SpinConfig c : kAllConfigs) {
    const auto ev = wavepacket::evolve(p, c, m, g, times);
    const double h = ev.x[1] - ev.x[0];
    double e2 = 0.0;
    for (std::size_t i = 0; i < ev.x.size(); ++i) {
      e2 += std::norm(ev.snapshots[0][i] - p.amplitude(ev.x[i])) * h;
    }
    l2 = std::max(l2, std::sqrt(e2));
    drift = std::max({drift, ev.norm_drift, ev.max_norm_error});
    for (const double w : ev.wall_values) wall = std::max(wall, w);
  }

  std::vector<double> narrow;
  for (const double dk : {0.05, 0.02, 0.01, 0.005}) {
    narrow.push_back(wavepacket::packet_gate_fidelity(
        wavepacket::GaussianPacket(-4.0 / dk, 1.0, dk), r, m));
  }
  bool increasing = true;
  for (std::size_t i = 1; i < narrow.size(); ++i) increasing &= narrow[i] > narrow[i - 1];
  const double f_k = narrow.front();
  const double f_t = wavepacket::time_domain_gate_fidelity(p, r, m);
  const double t = seconds_since(t0);

  const bool ok = l2 < 1e-4 && drift < 1e-6 && wall < 1e-8 && increasing &&
                  narrow.back() > 0.999 && f_k >= 0.95 && std::abs(f_k - f_t) < 1e-3 && t < 60.0;
  report(6, "wavepacket suite", ok,
         "L2(t=0) " + fmt("%.2e", l2) + ", norm drift " + fmt("%.2e", drift) + ", |Psi(x3)| " +
             fmt("%.1e", wall) + ", F_wp(dk=0.05/0.005) " + fmt("%.5f", f_k) + "/" +
             fmt("%.6f", narrow.back()) + ", |F_time - F_k| " + fmt("%.1e", std::abs(f_k - f_t)) +
             ", " + fmt("%.1f s", t));
}

void working_conditions() {
  auto bound = [](const char* name) {
    const auto m = wavepacket::material_preset(name);
    return wavepacket::working_condition(m.group_velocity(), m.wavelength);
  };
  const double gaas = bound("gaas"), diamond = bound("diamond");
  const bool ok = std::abs(gaas / 1.6e-14 - 1.0) <= 0.1 && std::abs(diamond / 8e-15 - 1.0) <= 0.1;
  report(7, "working-condition presets", ok,
         "GaAs " + fmt("%.3e s", gaas) + ", diamond " + fmt("%.3e s", diamond));
}

std::string slurp_tree(const fs::path& root) {
  std::string all;
  if (fs::is_regular_file(root)) {
    std::ifstream in(root, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) all += f.filename().string() + "\n" + slurp_tree(f);
  return all;
}

void determinism(const char* cli) {
  const fs::path dir = fs::temp_directory_path() / ("mirrorgate_accept_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::vector<std::string> commands = {"solve",    "gate",     "fidelity-sweep",
                                             "wavepacket", "duration", "working-condition",
                                             "equivalence"};
  int identical = 0;
  std::string mismatched;
  for (const auto& cmd : commands) {
    std::string data[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (cmd + "_" + std::to_string(run));
      int code = 0;
      if (cli) {
        const std::string line = std::string("\"") + cli + "\" " + cmd + " --out \"" +
                                 out.string() + "\" > /dev/null 2>&1";
        code = std::system(line.c_str());
      } else {
        cli::Invocation inv;
        inv.command = cmd;
        inv.out = out.string();
        std::ostringstream sink;
        code = cli::run(inv, sink, sink);
      }
      data[run] = code == 0 && fs::exists(out) ? slurp_tree(out) : "";
    }
    if (!data[0].empty() && data[0] == data[1]) {
      ++identical;
    } else {
      mismatched += " " + cmd;
    }
  }
  fs::remove_all(dir);
  report(8, "determinism", identical == static_cast<int>(commands.size()),
         std::to_string(identical) + "/" + std::to_string(commands.size()) +
             " commands byte-identical across two runs" +
             (mismatched.empty() ? "" : " (differs:" + mismatched + ")") +
             (cli ? "" : " [in-process]"));
}

void guarded(const std::function<void()>& f, int id, const char* name) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  guarded(unitarity, 1, "unitarity");
  guarded(completeness, 2, "open-line completeness");
  guarded(cz_reproduction, 3, "CZ reproduction");
  guarded(fidelity_formula, 4, "fidelity formula");
  guarded(equivalence, 5, "setup A/B equivalence");
  guarded(wavepacket_suite, 6, "wavepacket suite");
  guarded(working_conditions, 7, "working-condition presets");
  guarded([&] { determinism(cli); }, 8, "determinism");
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
