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

// CZ-regime geometries, the large-gamma gate, the Pauli chi matrix and
// process fidelity.
//
// Pauli ordering: chi index m = 4 a + b for A_m = P_a (x) P_b with
// P = {I, X, Y, Z}; the first factor acts on center 1 (the high bit of the
// computational index). A_m are unnormalized, so U = sum_m c_m A_m with
// c_m = Tr(A_m^dag U) / 4 and chi = c c^dag.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mirrorgate/scattering.hpp"
#include "mirrorgate/types.hpp"

namespace mirrorgate::gate {

using Matrix4 = Eigen::Matrix4cd;
using ProcessMatrix = Eigen::Matrix<cplx, 16, 16>;

/// k0 x21 = n pi and k0 x32 = (n' + 1/2) pi.
struct CZRegime {
  int n = 1;
  int n_prime = 0;
  double k0 = 1.0;

  Geometry geometry() const;
};

CZRegime cz_regime(int n, int n_prime, double k0);

/// diag(1, 1, 1, -1)
Matrix4 cz_gate();

/// gamma -> infinity gate at wave vector k >= 0: diag(1, 1, e^{2ikx2}, e^{2ikx3}).
ReflectionGate ideal_gate_limit(double k, const Geometry& geometry);

const std::array<Matrix4, 16>& pauli_basis();

/// chi of U rho U^dag. Throws InvalidArgument if U is not unitary to 1e-8.
ProcessMatrix pauli_chi(const Matrix4& unitary);

/// chi of an arbitrary linear map on 4x4 operators, read off its Choi matrix.
ProcessMatrix chi_from_channel(const std::function<Matrix4(const Matrix4&)>& channel);

/// Re Tr(chi_ref chi).
double chi_overlap(const ProcessMatrix& chi_ref, const ProcessMatrix& chi);

inline constexpr double kRouteTolerance = 1e-10;

/// Tr(chi_ref chi_gate), cross-checked against |Tr(ref^dag gate)|^2 / 16.
/// Throws NumericalError if the two routes differ by more than 1e-10.
double process_fidelity(const Matrix4& gate, const Matrix4& reference);

/// [3 + 2 cos(2k x2) - cos(2k x32) - 2 cos(2k x3)] / 8: fidelity of the
/// large-gamma gate at k against CZ.
double fidelity_closed_form(double k, const Geometry& geometry);

struct FidelitySample {
  double k_over_k0 = 0.0;
  double fidelity = 0.0;
};

struct FidelityCurve {
  CZRegime regime;
  std::optional<double> gamma;  // empty: large-gamma limit
  std::vector<FidelitySample> samples;
  /// Largest h with F >= threshold at every sample |k/k0 - 1| <= h.
  double window_half_width = 0.0;
  /// F does not increase moving away from k0 inside that window.
  bool monotone_near_k0 = false;
};

inline constexpr double kFidelityThreshold = 0.95;

/// Finite-gamma gate fidelity against CZ at k, for a massive model with
/// strength gamma at k0.
double finite_gamma_fidelity(const CZRegime& regime, double gamma, double k);

/// F against k/k0 on `samples` equally spaced points of [lo, hi]. A single
/// sample is allowed only when lo == hi.
FidelityCurve fidelity_sweep(const CZRegime& regime, double lo, double hi,
                             int samples, std::optional<double> gamma = {},
                             double threshold = kFidelityThreshold);

/// Widest symmetric window around k/k0 = 1 with F >= threshold.
double symmetric_window(const std::vector<FidelitySample>& samples,
                        double threshold);

}  // namespace mirrorgate::gate
