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

// Photon in a 1D waveguide scattering from two Lambda atoms before a mirror.
// Logical |0> is the bright ground combination (g0 + g1)/sqrt(2), logical |1>
// the dark one (g0 - g1)/sqrt(2); a dark atom does not couple to the field.

#include <utility>
#include <vector>

#include "mirrorgate/scattering.hpp"
#include "mirrorgate/types.hpp"

namespace mirrorgate::photonic {

struct LambdaAtomParams {
  double velocity = 1.0;
  double omega0 = 0.0;
  double coupling = 0.0;  // J, per ground-state branch

  LambdaAtomParams() = default;
  LambdaAtomParams(double v, double omega0, double j);

  double effective_coupling() const;  // J~ = sqrt(2) J
  CouplingModel model() const;
};

/// Normalized amplitudes over {|g0>, |g1>}.
class GroundDoubletState {
 public:
  GroundDoubletState(cplx g0, cplx g1);
  cplx g0() const { return g0_; }
  cplx g1() const { return g1_; }

 private:
  cplx g0_;
  cplx g1_;
};

/// (c_plus, c_minus) = ((g0 + g1)/sqrt2, (g0 - g1)/sqrt2).
std::pair<cplx, cplx> bright_dark_transform(const GroundDoubletState& state);
GroundDoubletState bright_dark_inverse(cplx c_plus, cplx c_minus);

struct EffectiveCoupling {
  double barrier = 0.0;  // Gamma_eff = J~^2 / (v k - omega0)
  double mass = 0.0;     // m_eff = k / v
  double gamma = 0.0;    // m_eff Gamma_eff / k
};

EffectiveCoupling effective_coupling(const LambdaAtomParams& params, Wavevector k);

/// Detuning v k - omega0 giving the requested gamma_eff.
double detuning_for_gamma(const LambdaAtomParams& params, double gamma_eff);

/// Independent solve of the single-excitation problem: seven amplitudes
/// (r, a1, b1, a2, b2, eps1, eps2) from the chiral jump conditions
/// Delta psi_+- = -+ i (J~/v) eps_i, the atomic equations
/// (v k - omega0) eps_i = J~ delta psi(x_i), and the hard wall.
ScatteringSolution photonic_stationary_state(SpinConfig config,
                                             const LambdaAtomParams& params,
                                             const Geometry& geometry,
                                             Wavevector k);

struct EquivalenceReport {
  double max_deviation = 0.0;  // max |r_photonic - r_massive|
  double max_unitarity_defect = 0.0;
  std::size_t points = 0;
  bool passed = false;
};

inline constexpr double kEquivalenceTolerance = 1e-8;

/// Compares photonic r_alpha with scattering-core at (m, Gamma) = (k/v,
/// Gamma_eff) for every alpha and grid point.
EquivalenceReport verify_equivalence(const LambdaAtomParams& params,
                                     const Geometry& geometry,
                                     const std::vector<double>& k_grid);

}  // namespace mirrorgate::photonic
