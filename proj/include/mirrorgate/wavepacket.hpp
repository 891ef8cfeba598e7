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

// Finite-bandwidth packets: Gaussian initial states synthesized from the exact
// stationary states,
//
//   Psi_alpha(x, t) = integral dk phi~(k) e^{-i E(k) t} Psi_{k alpha}(x) / sqrt(2 pi),
//
// evaluated with Gauss-Legendre quadrature in k. The packet's overlap with a
// stationary state is taken as phi~(k), which holds while the packet starts
// well outside the scattering region.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mirrorgate/gate_analysis.hpp"
#include "mirrorgate/kernels.hpp"
#include "mirrorgate/quadrature.hpp"
#include "mirrorgate/scattering.hpp"
#include "mirrorgate/types.hpp"

namespace mirrorgate::wavepacket {

/// phi(x) = (2 pi dx^2)^{-1/4} exp(-(x - x0)^2 / (4 dx^2)) e^{i k0 x}, with
/// dx = 1 / (2 dk): |phi|^2 has width dx and |phi~|^2 has width dk.
class GaussianPacket {
 public:
  /// Throws InvalidArgument naming the violated admissibility condition
  /// (|x1 - x0| >= 3 dx, k0 >= 3 dk).
  GaussianPacket(double x0, double k0, double dk);

  double x0() const { return x0_; }
  double k0() const { return k0_; }
  double dk() const { return dk_; }
  double dx() const { return 0.5 / dk_; }

  cplx amplitude(double x) const;
  /// phi~(k) = (2 pi)^{-1/2} integral dx e^{-ikx} phi(x)
  cplx spectrum(double k) const;
  /// Fraction of |phi~|^2 at k <= 0.
  double negative_k_weight() const;

 private:
  double x0_;
  double k0_;
  double dk_;
};

GaussianPacket gaussian_packet(double x0, double k0, double dk);

/// <Psi_k alpha | Psi_0> in the far-packet approximation: phi~(k) for every alpha.
cplx spectral_overlap(const GaussianPacket& packet, double k);

/// Direct quadrature of integral dx psi_+^*(x) phi(x) over x <= x3, with
/// psi_+ the right-moving part of the stationary state (1/sqrt(2 pi)
/// normalized). Diagnostic for the approximation above.
cplx measured_overlap(const GaussianPacket& packet,
                      const ScatteringSolution& solution,
                      const Geometry& geometry);

struct QuadratureSpec {
  int nodes = 401;
  double half_width = 6.0;  // in units of dk, clipped at k = 0
  bool refine_resonances = true;
};

/// Gauss-Legendre rule over the spectral window, and the spectral mass it
/// leaves out.
struct SpectralWindow {
  double lo = 0.0;
  double hi = 0.0;
  QuadratureRule rule;
  double truncated_mass = 0.0;
  std::size_t refined = 0;  // resonances the rule was graded around
};

/// Plain `spec.nodes`-point rule when no resonance is narrower than a few
/// node spacings. Otherwise composite 16-point panels at the same base
/// density, graded geometrically (ratio 4) from each narrow resonance down
/// to its width.
SpectralWindow spectral_window(const GaussianPacket& packet,
                               const QuadratureSpec& spec = {},
                               const std::vector<Resonance>& resonances = {});

/// Narrow resonances of the listed configurations inside the window.
std::vector<Resonance> window_resonances(const GaussianPacket& packet,
                                         const CouplingModel& model,
                                         const Geometry& geometry,
                                         const std::vector<SpinConfig>& configs,
                                         const QuadratureSpec& spec = {});

/// Stationary states of `config` on the window, weighted for synthesis.
/// `eps` holds the excited-atom amplitudes (photonic model, else zeros).
struct BranchBasis {
  kernels::SpectralBasis basis;
  std::array<std::vector<cplx>, 2> eps;
  bool chiral_density = false;  // photonic: |psi_+|^2 + |psi_-|^2
  double truncated_mass = 0.0;
  SpectralWindow window;
};

BranchBasis branch_basis(const GaussianPacket& packet, SpinConfig config,
                         const CouplingModel& model, const Geometry& geometry,
                         const QuadratureSpec& spec = {});

struct GridSpec {
  double spacing = 0.0;          // 0: the largest admissible spacing
  std::optional<double> x_min;   // default: covers the packet at every time
};

/// Largest admissible spacing 2 pi / (20 (k0 + 3 dk)).
double max_grid_spacing(const GaussianPacket& packet);

/// Centre of the freely moving packet reflected at the mirror, at time t.
double packet_center(const GaussianPacket& packet, const CouplingModel& model,
                     const Geometry& geometry, double t);

/// Position width at time t (massive packets spread, photonic ones do not).
double packet_width(const GaussianPacket& packet, const CouplingModel& model,
                    double t);

/// Time at which the reflected packet's centre is 3 widths left of x1.
double scattering_complete_time(const GaussianPacket& packet,
                                const CouplingModel& model,
                                const Geometry& geometry);

inline constexpr double kNormTolerance = 1e-6;

struct PacketEvolution {
  SpinConfig config;
  std::vector<double> x;                       // uniform grid up to x3
  std::vector<double> times;
  std::vector<std::vector<cplx>> snapshots;    // Psi(x, t) per time
  std::vector<double> norms;                   // total probability per time
  std::vector<double> wall_values;             // |Psi(x3, t)|
  std::vector<double> k_nodes;
  std::vector<double> k_weights;
  double truncated_mass = 0.0;
  double norm_drift = 0.0;                     // max |norm(t) - norm(t_0)|
  double max_norm_error = 0.0;                 // max |norm(t) - 1|
};

/// Throws InvalidArgument if the grid is coarser than max_grid_spacing.
PacketEvolution evolve(const GaussianPacket& packet, SpinConfig config,
                       const CouplingModel& model, const Geometry& geometry,
                       const std::vector<double>& times,
                       const GridSpec& grid = {},
                       const QuadratureSpec& spec = {});

/// Inner products G(a, b) = <Psi_b(t) | Psi_a(t)> of the four branches
/// (alpha = a, b in basis order), integrated with Gauss-Legendre panels.
Eigen::Matrix4cd branch_gram(const GaussianPacket& packet,
                             const CouplingModel& model,
                             const Geometry& geometry, double t,
                             const QuadratureSpec& spec = {});

struct ConditionalState {
  double t = 0.0;
  std::vector<double> x;
  std::array<std::vector<cplx>, 4> branch_fields;  // c_alpha Psi_alpha(x, t)
  Eigen::Matrix4cd rho;                            // reduced qubit state
  double purity = 0.0;
  double excited_population = 0.0;                 // photonic atoms in |e>
};

ConditionalState conditional_evolution(const GaussianPacket& packet,
                                       const std::array<cplx, 4>& qubit_state,
                                       const CouplingModel& model,
                                       const Geometry& geometry, double t,
                                       const GridSpec& grid = {},
                                       const QuadratureSpec& spec = {});

/// sum_j w_j |phi~(k_j)|^2 F(k_j) / sum_j w_j |phi~(k_j)|^2, with F the
/// process fidelity of the model's gate at k_j against CZ.
double packet_gate_fidelity(const GaussianPacket& packet,
                            const gate::CZRegime& regime,
                            const CouplingModel& model,
                            const QuadratureSpec& spec = {});

/// Massive model of strength gamma at k0; no gamma: the large-gamma gate.
double packet_gate_fidelity(const GaussianPacket& packet,
                            const gate::CZRegime& regime,
                            std::optional<double> gamma,
                            const QuadratureSpec& spec = {});

/// Same fidelity read from the branch overlaps after scattering completes:
/// the channel rho -> G o rho (Hadamard product with the Gram matrix).
double time_domain_gate_fidelity(const GaussianPacket& packet,
                                 const gate::CZRegime& regime,
                                 const CouplingModel& model,
                                 const QuadratureSpec& spec = {});

/// Order-of-magnitude durations from Delta E Delta tau ~ 1.
struct DurationReport {
  double group_velocity = 0.0;
  double dtau = 0.0;      // 1 / (v_g dk)
  double dtau_min = 0.0;  // 10 / (v_g k0), the 5% bandwidth limit
  double td_bound = 0.0;  // decoherence time must greatly exceed this
  bool order_of_magnitude = true;
};

DurationReport gate_duration(const GaussianPacket& packet,
                             const CouplingModel& model);

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

struct MaterialPreset {
  std::string name;
  double refractive_index = 1.0;
  double wavelength = 0.0;  // m

  double group_velocity() const { return kSpeedOfLight / refractive_index; }
};

/// "gaas" (n = 3.4, 900 nm) and "diamond" (n = 2.4, 640 nm).
MaterialPreset material_preset(const std::string& name);

/// 10 / (v k0) with k0 = 2 pi / lambda0, SI units in and out.
double working_condition(double velocity, double wavelength);

}  // namespace mirrorgate::wavepacket
