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

// Stationary scattering of a flying particle from two contact potentials at
// x1 = 0 and x2, with a hard wall (perfect mirror) at x3.
//
// For configuration alpha the stationary state is
//
//   Psi(x) = e^{ikx} + r e^{-ikx}         x < 0
//          = a1 e^{ikx} + b1 e^{-ikx}     0 <= x < x2
//          = a2 e^{ikx} + b2 e^{-ikx}     x2 <= x <= x3
//
// (no 1/sqrt(2 pi) prefactor), fixed by continuity at x1 and x2, Psi(x3) = 0
// and the jumps Psi'(x_i+) - Psi'(x_i-) = 2 k gamma delta_{alpha_i 0} Psi(x_i),
// with gamma = m Gamma / k.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mirrorgate/types.hpp"

namespace mirrorgate {

struct Barrier {
  double position = 0.0;
  double strength = 0.0;  // Gamma (energy x length)
};

/// Active delta barriers for `config`; a center contributes iff alpha_i = 0.
std::vector<Barrier> effective_potential(SpinConfig config,
                                         const CouplingModel& model,
                                         const Geometry& geometry, Wavevector k);

struct ScatteringSolution {
  SpinConfig config;
  double k = 0.0;
  double gamma = 0.0;
  cplx r, a1, b1, a2, b2;
  // Excited-atom amplitudes, photonic model only.
  std::optional<cplx> eps1, eps2;
  double residual = 0.0;  // max boundary-condition violation
  double rcond = 0.0;     // condition estimate of the linear system

  /// (right-moving, left-moving) coefficients in region 0, 1 or 2.
  std::pair<cplx, cplx> region_coefficients(int region) const;
};

/// Region index of x: 0 left of x1, 1 between the centers, 2 up to the wall.
int region_of(const Geometry& geometry, double x);

/// Dense 5x5 boundary-condition solve for a model.
ScatteringSolution solve_stationary_state(SpinConfig config,
                                          const CouplingModel& model,
                                          const Geometry& geometry,
                                          Wavevector k);

/// Same solve for an explicit dimensionless strength; any finite real gamma
/// is accepted (negative values are attractive barriers).
ScatteringSolution solve_for_strength(SpinConfig config, double gamma,
                                      const Geometry& geometry, Wavevector k);

/// Psi(x) for x <= x3. Throws InvalidArgument beyond the wall.
cplx wavefunction_eval(const ScatteringSolution& solution,
                       const Geometry& geometry, double x);

/// Max violation of the five boundary conditions, recomputed from the
/// piecewise wavefunction (jump conditions divided by k).
double boundary_residual(const ScatteringSolution& solution,
                         const Geometry& geometry);

/// The reference closed form, evaluated literally:
///   r = -exp{2i arg[e^{-ikx31} - 2 gamma d2 (cos kx21 - (i + 2 gamma d1)
///        sin kx21) sin kx32 - 2 gamma d1 sin kx31]}
/// Throws NumericalError if the bracket vanishes.
cplx reflection_amplitude_closed_form(SpinConfig config, double gamma,
                                      const Geometry& geometry, Wavevector k);

/// Closed form in the solver's convention (incoming e^{ikx}, r multiplies
/// e^{-ikx}): r(gamma) = conj(closed_form(-gamma)).
cplx reflection_amplitude_reconciled(SpinConfig config, double gamma,
                                     const Geometry& geometry, Wavevector k);

/// Narrow scattering resonance: a complex zero center - i width of the
/// reflection denominator. Near it r(k) winds by 2 pi over a few widths and
/// the interior amplitudes peak.
struct Resonance {
  double center = 0.0;
  double width = 0.0;
};

/// Resonances of `config` with centers in [k_lo, k_hi] and width below
/// k_hi - k_lo, found by Newton iteration in complex k from the local minima
/// of the denominator on a `scan_points` grid.
std::vector<Resonance> find_resonances(SpinConfig config,
                                       const CouplingModel& model,
                                       const Geometry& geometry, double k_lo,
                                       double k_hi, int scan_points = 4096);

/// Diagonal reflection operator diag(r00, r01, r10, r11).
struct ReflectionGate {
  std::array<cplx, 4> entries{};
  double max_unitarity_defect = 0.0;  // max_alpha | 1 - |r_alpha| |

  /// Entries divided by r00.
  std::array<cplx, 4> phase_stripped() const;
  Eigen::Matrix4cd matrix() const;
};

ReflectionGate reflection_gate(const CouplingModel& model,
                               const Geometry& geometry, Wavevector k);

/// Gate from per-configuration strengths, shared by callers that already
/// hold gamma(k).
ReflectionGate reflection_gate_for_strength(double gamma,
                                            const Geometry& geometry,
                                            Wavevector k);

struct OpenLineAmplitudes {
  cplx r;
  cplx t;
};

/// Infinite wire, no mirror, barriers at 0 and x2.
OpenLineAmplitudes open_line_scattering(SpinConfig config,
                                        const CouplingModel& model, double x2,
                                        Wavevector k);

struct OpenLineResult {
  std::array<OpenLineAmplitudes, 4> amplitudes{};

  Eigen::Matrix4cd reflection() const;
  Eigen::Matrix4cd transmission() const;
  /// max |(R R^dag + T T^dag - 1)_ij|
  double completeness_defect() const;
};

OpenLineResult open_line_operators(const CouplingModel& model, double x2,
                                   Wavevector k);

}  // namespace mirrorgate
