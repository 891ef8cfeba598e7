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

#include "mirrorgate/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <span>

namespace mirrorgate::wavepacket {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Gauss-Legendre panels for x-integrals: at most half the shortest
// wavelength in the window per panel.
constexpr int kPanelOrder = 16;

double panel_length(const GaussianPacket& packet, const QuadratureSpec& spec) {
  return kPi / (packet.k0() + spec.half_width * packet.dk());
}

double default_x_min(const GaussianPacket& packet, const CouplingModel& model,
                     const Geometry& geometry, std::span<const double> times) {
  double x_min = packet.x0() - 8.0 * packet.dx();
  for (const double t : times) {
    x_min = std::min(x_min, packet_center(packet, model, geometry, t) -
                                8.0 * packet_width(packet, model, t));
  }
  return std::min(x_min, -1.0);
}

QuadratureRule x_rule(const GaussianPacket& packet, const Geometry& geometry,
                      double x_min, const QuadratureSpec& spec) {
  return piecewise_gauss_legendre({x_min, geometry.x1(), geometry.x2(), geometry.x3()},
                                  panel_length(packet, spec), kPanelOrder);
}

struct BranchField {
  kernels::FieldComponents field;
  std::array<cplx, 2> eps{};
};

BranchField synthesize_branch(const BranchBasis& b, std::span<const double> x,
                              double t) {
  BranchField out;
  kernels::parallel::synthesize(b.basis, x, t, out.field);
  for (int i = 0; i < 2; ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < b.basis.size(); ++j) {
      acc += b.basis.weight[j] * std::polar(1.0, -b.basis.energy[j] * t) * b.eps[i][j];
    }
    out.eps[i] = acc;
  }
  return out;
}

// Field part of <g | f> on a quadrature rule.
cplx field_inner(const BranchField& g, const BranchField& f,
                 const QuadratureRule& rule, bool chiral) {
  cplx acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (chiral) {
      acc += rule.weights[i] * (std::conj(g.field.plus[i]) * f.field.plus[i] +
                                std::conj(g.field.minus[i]) * f.field.minus[i]);
    } else {
      acc += rule.weights[i] * std::conj(g.field.total(i)) * f.field.total(i);
    }
  }
  return acc;
}

double excited_norm(const BranchField& f) {
  return std::norm(f.eps[0]) + std::norm(f.eps[1]);
}

void require_regime_carrier(const GaussianPacket& packet,
                            const gate::CZRegime& regime) {
  if (std::abs(packet.k0() - regime.k0) > 1e-12 * regime.k0) {
    throw InvalidArgument("packet carrier k0 must equal the regime k0");
  }
}

}  // namespace

GaussianPacket::GaussianPacket(double x0, double k0, double dk)
    : x0_(x0), k0_(k0), dk_(dk) {
  if (!std::isfinite(x0) || !std::isfinite(k0) || !std::isfinite(dk)) {
    throw InvalidArgument("GaussianPacket: parameters must be finite");
  }
  if (k0 <= 0.0 || dk <= 0.0) {
    throw InvalidArgument("GaussianPacket: k0 and dk must be > 0");
  }
  if (!(x0 < 0.0)) {
    throw InvalidArgument("GaussianPacket: packet must start left of x1 (x0 < 0)");
  }
  if (std::abs(0.0 - x0) < 3.0 * dx()) {
    throw InvalidArgument(
        "GaussianPacket: admissibility |x1 - x0| >= 3 dx violated (packet "
        "overlaps the scattering region: |x0| = " +
        std::to_string(std::abs(x0)) + ", 3 dx = " + std::to_string(3.0 * dx()) +
        ")");
  }
  if (k0 < 3.0 * dk) {
    throw InvalidArgument(
        "GaussianPacket: admissibility k0 >= 3 dk violated (packet contains "
        "left-moving components: k0 = " +
        std::to_string(k0) + ", 3 dk = " + std::to_string(3.0 * dk) + ")");
  }
}

GaussianPacket gaussian_packet(double x0, double k0, double dk) {
  return GaussianPacket(x0, k0, dk);
}

cplx GaussianPacket::amplitude(double x) const {
  const double sigma = dx();
  const double norm = std::pow(2.0 * kPi * sigma * sigma, -0.25);
  const double u = x - x0_;
  return norm * std::exp(-u * u / (4.0 * sigma * sigma)) *
         std::polar(1.0, k0_ * x);
}

cplx GaussianPacket::spectrum(double k) const {
  const double sigma = dx();
  const double norm = std::sqrt(2.0) * sigma * std::pow(2.0 * kPi * sigma * sigma, -0.25);
  const double q = k - k0_;
  return norm * std::exp(-q * q * sigma * sigma) * std::polar(1.0, -q * x0_);
}

double GaussianPacket::negative_k_weight() const {
  return normal_cdf(-k0_ / dk_);
}

cplx spectral_overlap(const GaussianPacket& packet, double k) {
  return packet.spectrum(k);
}

cplx measured_overlap(const GaussianPacket& packet,
                      const ScatteringSolution& solution,
                      const Geometry& geometry) {
  const double x_min = packet.x0() - 12.0 * packet.dx();
  const QuadratureRule rule = piecewise_gauss_legendre(
      {x_min, geometry.x1(), geometry.x2(), geometry.x3()},
      kPi / (packet.k0() + solution.k), kPanelOrder);
  cplx acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const cplx plus =
        solution.region_coefficients(region_of(geometry, x)).first *
        std::polar(1.0, solution.k * x) * kInvSqrt2Pi;
    acc += rule.weights[i] * std::conj(plus) * packet.amplitude(x);
  }
  return acc;
}

SpectralWindow spectral_window(const GaussianPacket& packet,
                               const QuadratureSpec& spec,
                               const std::vector<Resonance>& resonances) {
  if (spec.nodes < 2 || !(spec.half_width > 0.0)) {
    throw InvalidArgument("QuadratureSpec: need nodes >= 2 and half_width > 0");
  }
  SpectralWindow w;
  w.lo = std::max(0.0, packet.k0() - spec.half_width * packet.dk());
  w.hi = packet.k0() + spec.half_width * packet.dk();
  w.truncated_mass = 1.0 - (normal_cdf((w.hi - packet.k0()) / packet.dk()) -
                            normal_cdf((w.lo - packet.k0()) / packet.dk()));

  constexpr int kPanelOrder = 16;
  const double spacing = (w.hi - w.lo) / spec.nodes;
  std::vector<double> breaks = {w.lo, w.hi};
  for (const Resonance& r : resonances) {
    if (r.center <= w.lo || r.center >= w.hi || r.width >= 4.0 * spacing) continue;
    ++w.refined;
    breaks.push_back(r.center);
    for (double s = std::max(r.width, 1e-15 * r.center); s < w.hi - w.lo; s *= 4.0) {
      if (r.center - s > w.lo) breaks.push_back(r.center - s);
      if (r.center + s < w.hi) breaks.push_back(r.center + s);
    }
  }
  if (w.refined == 0) {
    w.rule = gauss_legendre(spec.nodes, w.lo, w.hi);
    return w;
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  w.rule = piecewise_gauss_legendre(breaks, kPanelOrder * spacing, kPanelOrder);
  return w;
}

std::vector<Resonance> window_resonances(const GaussianPacket& packet,
                                         const CouplingModel& model,
                                         const Geometry& geometry,
                                         const std::vector<SpinConfig>& configs,
                                         const QuadratureSpec& spec) {
  std::vector<Resonance> out;
  if (!spec.refine_resonances) return out;
  const SpectralWindow plain = spectral_window(packet, spec);
  for (const SpinConfig c : configs) {
    for (const Resonance& r : find_resonances(c, model, geometry, plain.lo, plain.hi)) {
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Resonance& a, const Resonance& b) { return a.center < b.center; });
  return out;
}

BranchBasis branch_basis(const GaussianPacket& packet, SpinConfig config,
                         const CouplingModel& model, const Geometry& geometry,
                         const QuadratureSpec& spec) {
  const SpectralWindow window = spectral_window(
      packet, spec, window_resonances(packet, model, geometry, {config}, spec));
  const std::size_t n = window.rule.nodes.size();

  const std::vector<ScatteringSolution> solutions =
      kernels::map_parallel<ScatteringSolution>(n, [&](std::size_t j) {
        return solve_stationary_state(config, model, geometry,
                                      Wavevector(window.rule.nodes[j]));
      });

  BranchBasis out;
  out.chiral_density = model.is_photonic();
  out.truncated_mass = window.truncated_mass;
  out.window = window;
  auto& b = out.basis;
  b.x2 = geometry.x2();
  b.x3 = geometry.x3();
  b.k = window.rule.nodes;
  b.energy.resize(n);
  b.weight.resize(n);
  for (int r = 0; r < 3; ++r) {
    b.plus[r].resize(n);
    b.minus[r].resize(n);
  }
  out.eps[0].assign(n, cplx{});
  out.eps[1].assign(n, cplx{});
  for (std::size_t j = 0; j < n; ++j) {
    const double k = b.k[j];
    b.energy[j] = model.energy(k);
    b.weight[j] = window.rule.weights[j] * packet.spectrum(k) * kInvSqrt2Pi;
    for (int r = 0; r < 3; ++r) {
      const auto [p, m] = solutions[j].region_coefficients(r);
      b.plus[r][j] = p;
      b.minus[r][j] = m;
    }
    if (solutions[j].eps1) out.eps[0][j] = *solutions[j].eps1;
    if (solutions[j].eps2) out.eps[1][j] = *solutions[j].eps2;
  }
  return out;
}

double max_grid_spacing(const GaussianPacket& packet) {
  return 2.0 * kPi / (20.0 * (packet.k0() + 3.0 * packet.dk()));
}

double packet_center(const GaussianPacket& packet, const CouplingModel& model,
                     const Geometry& geometry, double t) {
  const double unfolded = packet.x0() + model.group_velocity(packet.k0()) * t;
  return unfolded <= geometry.x3() ? unfolded : 2.0 * geometry.x3() - unfolded;
}

double packet_width(const GaussianPacket& packet, const CouplingModel& model,
                    double t) {
  if (model.is_photonic()) return packet.dx();
  const double m = model.massive().mass;
  const double s = t / (2.0 * m * packet.dx() * packet.dx());
  return packet.dx() * std::sqrt(1.0 + s * s);
}

double scattering_complete_time(const GaussianPacket& packet,
                                const CouplingModel& model,
                                const Geometry& geometry) {
  const double v = model.group_velocity(packet.k0());
  const double path = 2.0 * geometry.x3() - packet.x0();
  double t = (path + 3.0 * packet.dx()) / v;
  for (int it = 0; it < 100; ++it) {
    const double next = (path + 3.0 * packet_width(packet, model, t)) / v;
    if (std::abs(next - t) <= 1e-12 * next) return next;
    t = next;
  }
  return t;
}

PacketEvolution evolve(const GaussianPacket& packet, SpinConfig config,
                       const CouplingModel& model, const Geometry& geometry,
                       const std::vector<double>& times, const GridSpec& grid,
                       const QuadratureSpec& spec) {
  if (times.empty()) throw InvalidArgument("evolve: no snapshot times");
  for (const double t : times) {
    if (!std::isfinite(t)) throw InvalidArgument("evolve: times must be finite");
  }
  const double max_h = max_grid_spacing(packet);
  const double h = grid.spacing > 0.0 ? grid.spacing : max_h;
  if (h > max_h * (1.0 + 1e-12)) {
    throw InvalidArgument("evolve: grid spacing " + std::to_string(h) +
                          " is too coarse; required <= " + std::to_string(max_h));
  }
  const double x_min =
      grid.x_min ? *grid.x_min : default_x_min(packet, model, geometry, times);
  if (!(x_min < geometry.x1())) {
    throw InvalidArgument("evolve: grid must start left of x1");
  }

  PacketEvolution ev;
  ev.config = config;
  ev.times = times;
  const auto n = static_cast<std::size_t>(std::ceil((geometry.x3() - x_min) / h)) + 1;
  const double step = (geometry.x3() - x_min) / static_cast<double>(n - 1);
  ev.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ev.x[i] = geometry.x3() - static_cast<double>(n - 1 - i) * step;
  }

  const BranchBasis basis = branch_basis(packet, config, model, geometry, spec);
  ev.k_nodes = basis.window.rule.nodes;
  ev.k_weights = basis.window.rule.weights;
  ev.truncated_mass = basis.truncated_mass;

  const QuadratureRule rule = x_rule(packet, geometry, x_min, spec);
  const double wall[1] = {geometry.x3()};
  for (const double t : times) {
    kernels::FieldComponents on_grid;
    kernels::parallel::synthesize(basis.basis, ev.x, t, on_grid);
    std::vector<cplx> snapshot(n);
    for (std::size_t i = 0; i < n; ++i) snapshot[i] = on_grid.total(i);
    ev.snapshots.push_back(std::move(snapshot));

    const BranchField f = synthesize_branch(basis, rule.nodes, t);
    ev.norms.push_back(field_inner(f, f, rule, basis.chiral_density).real() +
                       excited_norm(f));

    kernels::FieldComponents at_wall;
    kernels::parallel::synthesize(basis.basis, wall, t, at_wall);
    ev.wall_values.push_back(std::abs(at_wall.total(0)));
  }
  for (const double norm : ev.norms) {
    ev.norm_drift = std::max(ev.norm_drift, std::abs(norm - ev.norms.front()));
    ev.max_norm_error = std::max(ev.max_norm_error, std::abs(norm - 1.0));
  }
  return ev;
}

namespace {

struct GramParts {
  Eigen::Matrix4cd field;
  std::array<double, 4> excited{};
};

GramParts gram_parts(const GaussianPacket& packet, const CouplingModel& model,
                     const Geometry& geometry, double t,
                     const QuadratureSpec& spec) {
  const double t_arr[1] = {t};
  const double x_min = default_x_min(packet, model, geometry, t_arr);
  const QuadratureRule rule = x_rule(packet, geometry, x_min, spec);
  std::array<BranchField, 4> fields;
  bool chiral = false;
  for (const SpinConfig c : kAllConfigs) {
    const BranchBasis b = branch_basis(packet, c, model, geometry, spec);
    chiral = b.chiral_density;
    fields[c.index()] = synthesize_branch(b, rule.nodes, t);
  }
  GramParts g;
  for (int a = 0; a < 4; ++a) {
    g.excited[a] = excited_norm(fields[a]);
    for (int b = 0; b < 4; ++b) {
      g.field(a, b) = field_inner(fields[b], fields[a], rule, chiral);
    }
  }
  return g;
}

}  // namespace

Eigen::Matrix4cd branch_gram(const GaussianPacket& packet,
                             const CouplingModel& model,
                             const Geometry& geometry, double t,
                             const QuadratureSpec& spec) {
  const GramParts parts = gram_parts(packet, model, geometry, t, spec);
  Eigen::Matrix4cd g = parts.field;
  for (int a = 0; a < 4; ++a) g(a, a) += parts.excited[a];
  return g;
}

ConditionalState conditional_evolution(const GaussianPacket& packet,
                                       const std::array<cplx, 4>& qubit_state,
                                       const CouplingModel& model,
                                       const Geometry& geometry, double t,
                                       const GridSpec& grid,
                                       const QuadratureSpec& spec) {
  double norm = 0.0;
  for (const cplx c : qubit_state) norm += std::norm(c);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw InvalidArgument("conditional_evolution: qubit state must be normalized");
  }
  ConditionalState out;
  out.t = t;
  const std::vector<double> times = {t};
  for (const SpinConfig c : kAllConfigs) {
    const PacketEvolution ev = evolve(packet, c, model, geometry, times, grid, spec);
    if (out.x.empty()) out.x = ev.x;
    auto& field = out.branch_fields[c.index()];
    field = ev.snapshots.front();
    for (auto& v : field) v *= qubit_state[c.index()];
  }

  const GramParts parts = gram_parts(packet, model, geometry, t, spec);
  for (int a = 0; a < 4; ++a) {
    out.excited_population += std::norm(qubit_state[a]) * parts.excited[a];
    for (int b = 0; b < 4; ++b) {
      out.rho(a, b) = qubit_state[a] * std::conj(qubit_state[b]) * parts.field(a, b);
    }
  }
  out.purity = (out.rho * out.rho).trace().real();
  return out;
}

double packet_gate_fidelity(const GaussianPacket& packet,
                            const gate::CZRegime& regime,
                            const CouplingModel& model,
                            const QuadratureSpec& spec) {
  require_regime_carrier(packet, regime);
  const Geometry geometry = regime.geometry();
  const SpectralWindow window = spectral_window(
      packet, spec,
      window_resonances(packet, model, geometry,
                        {kAllConfigs.begin(), kAllConfigs.end()}, spec));
  const gate::Matrix4 cz = gate::cz_gate();
  const std::vector<double> f = kernels::map_parallel<double>(
      window.rule.nodes.size(), [&](std::size_t j) {
        const ReflectionGate g =
            reflection_gate(model, geometry, Wavevector(window.rule.nodes[j]));
        return gate::process_fidelity(g.matrix(), cz);
      });
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double p = window.rule.weights[j] * std::norm(packet.spectrum(window.rule.nodes[j]));
    num += p * f[j];
    den += p;
  }
  return num / den;
}

double packet_gate_fidelity(const GaussianPacket& packet,
                            const gate::CZRegime& regime,
                            std::optional<double> gamma,
                            const QuadratureSpec& spec) {
  if (gamma) {
    return packet_gate_fidelity(
        packet, regime, CouplingModel::massive_with_gamma(*gamma, regime.k0), spec);
  }
  require_regime_carrier(packet, regime);
  const SpectralWindow window = spectral_window(packet, spec);
  const Geometry geometry = regime.geometry();
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < window.rule.nodes.size(); ++j) {
    const double k = window.rule.nodes[j];
    const double p = window.rule.weights[j] * std::norm(packet.spectrum(k));
    num += p * gate::fidelity_closed_form(k, geometry);
    den += p;
  }
  return num / den;
}

double time_domain_gate_fidelity(const GaussianPacket& packet,
                                 const gate::CZRegime& regime,
                                 const CouplingModel& model,
                                 const QuadratureSpec& spec) {
  require_regime_carrier(packet, regime);
  const Geometry geometry = regime.geometry();
  const double t = scattering_complete_time(packet, model, geometry);
  const Eigen::Matrix4cd g = branch_gram(packet, model, geometry, t, spec);
  const gate::ProcessMatrix chi = gate::chi_from_channel(
      [&](const gate::Matrix4& rho) -> gate::Matrix4 { return g.cwiseProduct(rho); });
  return gate::chi_overlap(gate::pauli_chi(gate::cz_gate()), chi);
}

DurationReport gate_duration(const GaussianPacket& packet,
                             const CouplingModel& model) {
  DurationReport r;
  r.group_velocity = model.group_velocity(packet.k0());
  r.dtau = 1.0 / (r.group_velocity * packet.dk());
  r.dtau_min = 10.0 / (r.group_velocity * packet.k0());
  r.td_bound = r.dtau_min;
  return r;
}

MaterialPreset material_preset(const std::string& name) {
  if (name == "gaas") return {"gaas", 3.4, 900e-9};
  if (name == "diamond") return {"diamond", 2.4, 640e-9};
  throw InvalidArgument("unknown material preset '" + name +
                        "' (expected gaas or diamond)");
}

double working_condition(double velocity, double wavelength) {
  if (!std::isfinite(velocity) || velocity <= 0.0) {
    throw InvalidArgument("working_condition: v must be > 0");
  }
  if (!std::isfinite(wavelength) || wavelength <= 0.0) {
    throw InvalidArgument("working_condition: lambda0 must be > 0");
  }
  const double k0 = 2.0 * kPi / wavelength;
  return 10.0 / (velocity * k0);
}

}  // namespace mirrorgate::wavepacket
