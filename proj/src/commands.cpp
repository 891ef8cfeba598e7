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

#include "mirrorgate/commands.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include "mirrorgate/gate_analysis.hpp"
#include "mirrorgate/kernels.hpp"
#include "mirrorgate/scattering.hpp"
#include "mirrorgate/wavepacket.hpp"

namespace mirrorgate::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kRadToDeg = 180.0 / kPi;

std::string regime_label(const gate::CZRegime& r) {
  return "n=" + std::to_string(r.n) + ",n'=" + std::to_string(r.n_prime) +
         ",k0=" + format_number(r.k0);
}

std::string model_label(const CouplingModel& m) {
  if (m.is_massive()) {
    return "massive m=" + format_number(m.massive().mass) +
           " Gamma=" + format_number(m.massive().barrier);
  }
  const auto& p = m.photonic();
  return "photonic v=" + format_number(p.velocity) + " omega0=" + format_number(p.omega0) +
         " J=" + format_number(p.coupling);
}

void stamp(SweepTable& t, const RunConfig& cfg) {
  t.set_meta("command", cfg.command);
  t.set_meta("tool_version", kToolVersion);
  t.set_meta("timestamp", cfg.timestamp);
  t.set_meta("units", cfg.units == Units::kSI ? "SI" : "k0_units");
}

void stamp_physics(SweepTable& t, const RunConfig& cfg) {
  const Geometry g = cfg.geometry();
  t.set_meta("regime", cfg.geometry_override ? "custom geometry" : regime_label(cfg.regime));
  t.set_meta("x2", format_number(g.x2()));
  t.set_meta("x3", format_number(g.x3()));
  t.set_meta("model", model_label(cfg.model));
  try {
    t.set_meta("gamma_at_k0", format_number(cfg.model.gamma(Wavevector(cfg.regime.k0))));
  } catch (const PoleError&) {
    t.set_meta("gamma_at_k0", "pole");
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return out;
}

std::string serialize(const SweepTable& t, Format f) {
  return f == Format::kCsv ? t.to_csv() : t.to_json().dump(2) + "\n";
}

}  // namespace

SweepTable solve_table(const RunConfig& cfg) {
  const Geometry geom = cfg.geometry();
  const Wavevector k(cfg.k.value_or(cfg.regime.k0));
  SweepTable t({"alpha1", "alpha2", "k", "gamma", "re_r", "im_r", "abs_r", "phase_rad",
                "phase_deg", "stripped_phase_rad", "stripped_phase_deg", "residual"});
  stamp(t, cfg);
  stamp_physics(t, cfg);
  cplx r00{1.0, 0.0};
  for (const SpinConfig c : kAllConfigs) {
    const ScatteringSolution s = solve_stationary_state(c, cfg.model, geom, k);
    if (c.index() == 0) r00 = s.r;
    const double phase = std::arg(s.r);
    const double stripped = std::arg(s.r / r00);
    t.add_row({double(c.alpha1), double(c.alpha2), k.value(), s.gamma, s.r.real(),
               s.r.imag(), std::abs(s.r), phase, phase * kRadToDeg, stripped,
               stripped * kRadToDeg, s.residual});
  }
  return t;
}

SweepTable gate_table(const RunConfig& cfg) {
  const Geometry geom = cfg.geometry();
  const Wavevector k(cfg.k.value_or(cfg.regime.k0));
  const ReflectionGate g = reflection_gate(cfg.model, geom, k);
  const ReflectionGate ideal = gate::ideal_gate_limit(k, geom);
  const auto stripped = g.phase_stripped();
  const auto ideal_stripped = ideal.phase_stripped();
  const gate::Matrix4 cz = gate::cz_gate();

  SweepTable t({"alpha1", "alpha2", "re", "im", "stripped_re", "stripped_im",
                "stripped_phase_rad", "cz_deviation", "ideal_stripped_re",
                "ideal_stripped_im"});
  stamp(t, cfg);
  stamp_physics(t, cfg);
  t.set_meta("k", format_number(k));
  double worst = 0.0;
  for (const SpinConfig c : kAllConfigs) {
    const int i = c.index();
    const double dev = std::abs(stripped[i] - cz(i, i));
    worst = std::max(worst, dev);
    t.add_row({double(c.alpha1), double(c.alpha2), g.entries[i].real(), g.entries[i].imag(),
               stripped[i].real(), stripped[i].imag(), std::arg(stripped[i]), dev,
               ideal_stripped[i].real(), ideal_stripped[i].imag()});
  }
  t.set_meta("process_fidelity", format_number(gate::process_fidelity(g.matrix(), cz)));
  t.set_meta("max_cz_deviation", format_number(worst));
  t.set_meta("max_unitarity_defect", format_number(g.max_unitarity_defect));
  return t;
}

SweepResult fidelity_sweep_run(const RunConfig& cfg) {
  const Geometry geom = cfg.regime.geometry();
  const gate::FidelityCurve curve =
      gate::fidelity_sweep(cfg.regime, cfg.sweep_lo, cfg.sweep_hi, cfg.sweep_samples);
  const bool finite = cfg.model_given;
  const gate::Matrix4 cz = gate::cz_gate();
  const gate::ProcessMatrix chi_cz = gate::pauli_chi(cz);

  struct Row {
    double chi = 0.0;
    double finite = 0.0;
  };
  const std::vector<Row> rows =
      kernels::map_parallel<Row>(curve.samples.size(), [&](std::size_t i) {
        const double k = curve.samples[i].k_over_k0 * cfg.regime.k0;
        const gate::Matrix4 ideal = gate::ideal_gate_limit(k, geom).matrix();
        Row r;
        r.chi = gate::chi_overlap(chi_cz, gate::pauli_chi(ideal));
        if (finite) {
          const gate::Matrix4 g = reflection_gate(cfg.model, geom, Wavevector(k)).matrix();
          r.finite = gate::process_fidelity(g, cz);
        }
        return r;
      });

  std::vector<std::string> cols = {"k_over_k0", "F_closed", "F_chi"};
  if (finite) cols.emplace_back("F_finite_gamma");
  SweepResult out{SweepTable(cols), curve.window_half_width, 0.0};
  SweepTable& t = out.table;
  stamp(t, cfg);
  stamp_physics(t, cfg);
  std::vector<gate::FidelitySample> finite_samples;
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const gate::FidelitySample& s = curve.samples[i];
    std::vector<double> row = {s.k_over_k0, s.fidelity, rows[i].chi};
    if (finite) row.push_back(rows[i].finite);
    t.add_row(std::move(row));
    out.max_route_difference =
        std::max(out.max_route_difference, std::abs(s.fidelity - rows[i].chi));
    finite_samples.push_back({s.k_over_k0, rows[i].finite});
  }
  t.set_meta("threshold", format_number(gate::kFidelityThreshold));
  t.set_meta("window_half_width", format_number(out.window_half_width));
  t.set_meta("monotone_near_k0", curve.monotone_near_k0 ? "true" : "false");
  if (finite) {
    t.set_meta("window_half_width_finite_gamma",
               format_number(gate::symmetric_window(finite_samples, gate::kFidelityThreshold)));
  }
  t.set_meta("max_route_difference", format_number(out.max_route_difference));
  return out;
}

WavepacketResult wavepacket_run(const RunConfig& cfg) {
  const Geometry geom = cfg.regime.geometry();
  const wavepacket::GaussianPacket& packet = cfg.packet;
  const CouplingModel& model = cfg.model;
  const double t_done = wavepacket::scattering_complete_time(packet, model, geom);
  const std::vector<double> times =
      cfg.times.empty() ? linspace(0.0, t_done, cfg.snapshots) : cfg.times;

  std::array<wavepacket::PacketEvolution, 4> ev;
  for (const SpinConfig c : kAllConfigs) {
    ev[c.index()] = wavepacket::evolve(packet, c, model, geom, times, {}, cfg.quadrature);
  }

  WavepacketResult out;
  std::vector<std::string> cols = {"x"};
  for (const SpinConfig c : kAllConfigs) {
    cols.push_back("re_" + c.label());
    cols.push_back("im_" + c.label());
  }
  const std::vector<double>& x = ev[0].x;
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    SweepTable t(cols);
    stamp(t, cfg);
    stamp_physics(t, cfg);
    t.set_meta("t", format_number(times[ti]));
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::vector<double> row = {x[i]};
      for (const auto& e : ev) {
        row.push_back(e.snapshots[ti][i].real());
        row.push_back(e.snapshots[ti][i].imag());
      }
      t.add_row(std::move(row));
    }
    out.snapshots.push_back(std::move(t));
  }

  const double h = x.size() > 1 ? x[1] - x[0] : 0.0;
  double drift = 0.0, norm_err = 0.0, wall = 0.0;
  std::optional<double> l2_worst;
  ordered_json branches = ordered_json::array();
  for (const SpinConfig c : kAllConfigs) {
    const auto& e = ev[c.index()];
    double w = 0.0;
    for (const double v : e.wall_values) w = std::max(w, v);
    ordered_json b;
    b["config"] = c.label();
    b["norm_drift"] = e.norm_drift;
    b["max_norm_error"] = e.max_norm_error;
    b["max_wall_amplitude"] = w;
    b["k_nodes"] = e.k_nodes.size();
    if (times.front() == 0.0) {
      double e2 = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        e2 += std::norm(e.snapshots[0][i] - packet.amplitude(x[i])) * h;
      }
      const double l2 = std::sqrt(e2);
      b["reconstruction_l2"] = l2;
      l2_worst = std::max(l2_worst.value_or(0.0), l2);
    }
    branches.push_back(b);
    drift = std::max(drift, e.norm_drift);
    norm_err = std::max(norm_err, e.max_norm_error);
    wall = std::max(wall, w);
  }

  const double f_k = wavepacket::packet_gate_fidelity(packet, cfg.regime, model, cfg.quadrature);
  const double f_t =
      wavepacket::time_domain_gate_fidelity(packet, cfg.regime, model, cfg.quadrature);
  const wavepacket::DurationReport d = wavepacket::gate_duration(packet, model);

  ordered_json& s = out.summary;
  s["command"] = cfg.command;
  s["tool_version"] = kToolVersion;
  s["timestamp"] = cfg.timestamp;
  s["units"] = "k0_units";
  s["regime"] = regime_label(cfg.regime);
  s["model"] = model_label(model);
  s["packet"] = {{"x0", packet.x0()}, {"k0", packet.k0()}, {"dk", packet.dk()},
                 {"dx", packet.dx()}, {"negative_k_weight", packet.negative_k_weight()}};
  s["quadrature"] = {{"nodes", cfg.quadrature.nodes},
                     {"half_width", cfg.quadrature.half_width},
                     {"truncated_mass", ev[0].truncated_mass}};
  s["scattering_complete_time"] = t_done;
  s["times"] = times;
  s["grid_points"] = x.size();
  s["norm_drift"] = drift;
  s["max_norm_error"] = norm_err;
  s["norm_tolerance"] = wavepacket::kNormTolerance;
  s["max_wall_amplitude"] = wall;
  s["reconstruction_l2"] = l2_worst ? ordered_json(*l2_worst) : ordered_json(nullptr);
  s["F_wp"] = f_k;
  s["F_time_domain"] = f_t;
  s["fidelity_agreement"] = std::abs(f_k - f_t);
  s["durations"] = {{"group_velocity", d.group_velocity},
                    {"dtau", d.dtau},
                    {"dtau_min", d.dtau_min},
                    {"td_bound", d.td_bound},
                    {"order_of_magnitude", d.order_of_magnitude}};
  s["branches"] = branches;
  return out;
}

SweepTable duration_table(const RunConfig& cfg) {
  const wavepacket::DurationReport d = wavepacket::gate_duration(cfg.packet, cfg.model);
  SweepTable t({"k0", "dk", "group_velocity", "dtau", "dtau_min", "td_bound"});
  stamp(t, cfg);
  t.set_meta("model", model_label(cfg.model));
  t.set_meta("order_of_magnitude", d.order_of_magnitude ? "true" : "false");
  t.add_row({cfg.packet.k0(), cfg.packet.dk(), d.group_velocity, d.dtau, d.dtau_min,
             d.td_bound});
  return t;
}

SweepTable working_condition_table(const RunConfig& cfg) {
  SweepTable t({"refractive_index", "velocity_m_per_s", "wavelength_m", "k0_per_m",
                "td_bound_s"});
  stamp(t, cfg);
  t.set_meta("units", "SI");
  std::string names;
  for (const auto& m : cfg.materials) {
    names += (names.empty() ? "" : ";") + m.name;
    t.add_row({m.refractive_index, m.velocity, m.wavelength, 2.0 * kPi / m.wavelength,
               wavepacket::working_condition(m.velocity, m.wavelength)});
  }
  t.set_meta("rows", names);
  return t;
}

EquivalenceResult equivalence_run(const RunConfig& cfg) {
  const Geometry geom = cfg.geometry();
  const photonic::LambdaAtomParams& atoms = cfg.atoms;
  const std::vector<photonic::EquivalenceReport> per_k =
      kernels::map_parallel<photonic::EquivalenceReport>(
          cfg.k_grid.size(), [&](std::size_t i) {
            return photonic::verify_equivalence(atoms, geom, {cfg.k_grid[i]});
          });

  EquivalenceResult out;
  SweepTable& t = out.table;
  t = SweepTable({"k", "detuning", "gamma_eff", "max_deviation", "max_unitarity_defect"});
  stamp(t, cfg);
  t.set_meta("regime", cfg.geometry_override ? "custom geometry" : regime_label(cfg.regime));
  t.set_meta("x2", format_number(geom.x2()));
  t.set_meta("x3", format_number(geom.x3()));
  t.set_meta("model", model_label(atoms.model()));
  for (std::size_t i = 0; i < per_k.size(); ++i) {
    const Wavevector k(cfg.k_grid[i]);
    const double gamma = photonic::effective_coupling(atoms, k).gamma;
    t.add_row({k.value(), atoms.velocity * k - atoms.omega0, gamma, per_k[i].max_deviation,
               per_k[i].max_unitarity_defect});
    out.report.max_deviation = std::max(out.report.max_deviation, per_k[i].max_deviation);
    out.report.max_unitarity_defect =
        std::max(out.report.max_unitarity_defect, per_k[i].max_unitarity_defect);
    out.report.points += per_k[i].points;
  }
  out.report.passed = out.report.max_deviation < photonic::kEquivalenceTolerance;
  t.set_meta("tolerance", format_number(photonic::kEquivalenceTolerance));
  t.set_meta("max_deviation", format_number(out.report.max_deviation));
  t.set_meta("passed", out.report.passed ? "true" : "false");
  return out;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    nlohmann::json doc =
        inv.config_path ? load_config_file(*inv.config_path) : nlohmann::json::object();
    apply_overrides(doc, inv.command, inv.overrides);
    cfg = parse_config(doc, inv.command);
  } catch (const InvalidArgument& e) {
    err << "error: invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  std::ostream& note = inv.out ? out : err;
  // path (relative to --out) -> contents; "" is the single-file output.
  std::map<std::string, std::string> files;
  int code = kExitOk;
  try {
    const std::string& c = inv.command;
    if (c == "solve") {
      files[""] = serialize(solve_table(cfg), inv.format);
      note << "solve: 4 configurations written\n";
    } else if (c == "gate") {
      const SweepTable t = gate_table(cfg);
      files[""] = serialize(t, inv.format);
      note << "gate: process fidelity vs CZ = " << *t.meta("process_fidelity")
           << ", max deviation = " << *t.meta("max_cz_deviation") << "\n";
    } else if (c == "fidelity-sweep") {
      const SweepResult r = fidelity_sweep_run(cfg);
      files[""] = serialize(r.table, inv.format);
      note << "fidelity-sweep: widest symmetric window with F >= "
           << format_number(gate::kFidelityThreshold) << ": |k/k0 - 1| <= "
           << format_number(r.window_half_width) << " (max |F_closed - F_chi| = "
           << format_number(r.max_route_difference) << ")\n";
    } else if (c == "wavepacket") {
      const WavepacketResult r = wavepacket_run(cfg);
      const std::string ext = inv.format == Format::kCsv ? ".csv" : ".json";
      for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "snapshot_%03zu", i);
        files[name + ext] = serialize(r.snapshots[i], inv.format);
      }
      files["summary.json"] = r.summary.dump(2) + "\n";
      if (!inv.out) out << files["summary.json"];
      note << "wavepacket: F_wp = " << format_number(r.summary["F_wp"].get<double>())
           << ", norm drift = " << format_number(r.summary["norm_drift"].get<double>())
           << "\n";
      if (!inv.out) files.clear();
    } else if (c == "duration") {
      files[""] = serialize(duration_table(cfg), inv.format);
    } else if (c == "working-condition") {
      const SweepTable t = working_condition_table(cfg);
      files[""] = serialize(t, inv.format);
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        note << "working-condition: T_d >> " << format_number(t.rows[i].back()) << " s\n";
      }
    } else if (c == "equivalence") {
      const EquivalenceResult r = equivalence_run(cfg);
      files[""] = serialize(r.table, inv.format);
      note << "equivalence: max |r_photonic - r_massive| = "
           << format_number(r.report.max_deviation) << " over " << r.report.points
           << " points: " << (r.report.passed ? "pass" : "FAIL") << "\n";
      if (!r.report.passed) code = kExitThresholdFailure;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const NumericalError& e) {
    err << "error: numerical failure: " << e.what() << "\n";
    return kExitNumericalFailure;
  }

  namespace fs = std::filesystem;
  for (const auto& [name, contents] : files) {
    if (!inv.out) {
      out << contents;
      continue;
    }
    fs::path path = *inv.out;
    if (!name.empty()) {
      std::error_code ec;
      fs::create_directories(path, ec);
      path /= name;
    }
    std::ofstream f(path, std::ios::binary);
    f << contents;
    if (!f) {
      err << "error: cannot write " << path.string() << "\n";
      return 1;
    }
  }
  return code;
}

}  // namespace mirrorgate::cli
