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

#include "mirrorgate/gate_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mirrorgate/kernels.hpp"

namespace mirrorgate::gate {

namespace {

constexpr cplx kI{0.0, 1.0};

Eigen::Matrix2cd pauli(int which) {
  Eigen::Matrix2cd p;
  switch (which) {
    case 0:
      p << 1.0, 0.0, 0.0, 1.0;
      break;
    case 1:
      p << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      p << 0.0, -kI, kI, 0.0;
      break;
    default:
      p << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return p;
}

Matrix4 kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

void require_unitary(const Matrix4& u, const char* what) {
  const double defect =
      (u.adjoint() * u - Matrix4::Identity()).cwiseAbs().maxCoeff();
  if (defect > 1e-8) {
    throw InvalidArgument(std::string(what) +
                          ": input is not unitary (defect " +
                          std::to_string(defect) + ")");
  }
}

}  // namespace

Geometry CZRegime::geometry() const {
  const double x2 = n * kPi / k0;
  return Geometry(x2, x2 + (n_prime + 0.5) * kPi / k0);
}

CZRegime cz_regime(int n, int n_prime, double k0) {
  if (n < 1) throw InvalidArgument("cz_regime: n must be >= 1 so that x21 > 0");
  if (n_prime < 0) throw InvalidArgument("cz_regime: n' must be >= 0");
  if (!std::isfinite(k0) || k0 <= 0.0) {
    throw InvalidArgument("cz_regime: k0 must be > 0");
  }
  return {n, n_prime, k0};
}

Matrix4 cz_gate() {
  Matrix4 m = Matrix4::Identity();
  m(3, 3) = -1.0;
  return m;
}

ReflectionGate ideal_gate_limit(double k, const Geometry& geometry) {
  if (!std::isfinite(k) || k < 0.0) {
    throw InvalidArgument("ideal_gate_limit: k must be >= 0");
  }
  ReflectionGate g;
  g.entries = {1.0, 1.0, std::polar(1.0, 2.0 * k * geometry.x2()),
               std::polar(1.0, 2.0 * k * geometry.x3())};
  return g;
}

const std::array<Matrix4, 16>& pauli_basis() {
  static const std::array<Matrix4, 16> basis = [] {
    std::array<Matrix4, 16> b;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) b[4 * a + c] = kron(pauli(a), pauli(c));
    return b;
  }();
  return basis;
}

ProcessMatrix pauli_chi(const Matrix4& unitary) {
  require_unitary(unitary, "pauli_chi");
  Eigen::Matrix<cplx, 16, 1> c;
  const auto& basis = pauli_basis();
  for (int m = 0; m < 16; ++m) c(m) = (basis[m].adjoint() * unitary).trace() / 4.0;
  return c * c.adjoint();
}

ProcessMatrix chi_from_channel(
    const std::function<Matrix4(const Matrix4&)>& channel) {
  // Choi matrix J = sum_ij E(|i><j|) (x) |i><j|, then chi_mn = <<A_m|J|A_n>>/16
  // with |A>> = sum_i A|i> (x) |i>.
  Eigen::Matrix<cplx, 16, 16> choi = Eigen::Matrix<cplx, 16, 16>::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Matrix4 unit = Matrix4::Zero();
      unit(i, j) = 1.0;
      const Matrix4 image = channel(unit);
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) choi(4 * p + i, 4 * q + j) += image(p, q);
    }
  }
  const auto& basis = pauli_basis();
  Eigen::Matrix<cplx, 16, 16> vecs;
  for (int m = 0; m < 16; ++m)
    for (int p = 0; p < 4; ++p)
      for (int i = 0; i < 4; ++i) vecs(4 * p + i, m) = basis[m](p, i);
  return vecs.adjoint() * choi * vecs / 16.0;
}

double chi_overlap(const ProcessMatrix& chi_ref, const ProcessMatrix& chi) {
  return (chi_ref * chi).trace().real();
}

double process_fidelity(const Matrix4& gate, const Matrix4& reference) {
  const double via_chi = chi_overlap(pauli_chi(reference), pauli_chi(gate));
  const double via_trace = std::norm((reference.adjoint() * gate).trace()) / 16.0;
  if (std::abs(via_chi - via_trace) > kRouteTolerance) {
    throw NumericalError("process_fidelity: chi and trace routes disagree (" +
                         std::to_string(via_chi) + " vs " +
                         std::to_string(via_trace) + ")");
  }
  return via_chi;
}

double fidelity_closed_form(double k, const Geometry& geometry) {
  return (3.0 + 2.0 * std::cos(2.0 * k * geometry.x2()) -
          std::cos(2.0 * k * geometry.x32()) -
          2.0 * std::cos(2.0 * k * geometry.x3())) /
         8.0;
}

double finite_gamma_fidelity(const CZRegime& regime, double gamma, double k) {
  const CouplingModel model = CouplingModel::massive_with_gamma(gamma, regime.k0);
  const ReflectionGate g = reflection_gate(model, regime.geometry(), Wavevector(k));
  return process_fidelity(g.matrix(), cz_gate());
}

double symmetric_window(const std::vector<FidelitySample>& samples,
                        double threshold) {
  std::vector<FidelitySample> sorted = samples;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::abs(a.k_over_k0 - 1.0) < std::abs(b.k_over_k0 - 1.0);
  });
  double width = 0.0;
  for (const auto& s : sorted) {
    if (s.fidelity < threshold) break;
    width = std::abs(s.k_over_k0 - 1.0);
  }
  return width;
}

namespace {

bool monotone_away_from_peak(const std::vector<FidelitySample>& samples,
                             double half_width) {
  // Samples are ordered by k/k0; walk outwards from k0 on each side.
  const double slack = 1e-12;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const auto& prev = samples[i - 1];
    const auto& cur = samples[i];
    const double dp = prev.k_over_k0 - 1.0;
    const double dc = cur.k_over_k0 - 1.0;
    if (std::abs(dp) > half_width || std::abs(dc) > half_width) continue;
    if (dp >= 0.0 && cur.fidelity > prev.fidelity + slack) return false;
    if (dc <= 0.0 && prev.fidelity > cur.fidelity + slack) return false;
  }
  return true;
}

}  // namespace

FidelityCurve fidelity_sweep(const CZRegime& regime, double lo, double hi,
                             int samples, std::optional<double> gamma,
                             double threshold) {
  if (!(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidArgument("fidelity_sweep: need a finite range lo <= hi");
  }
  if (samples < 1 || (samples == 1 && lo != hi) || (samples > 1 && lo == hi)) {
    throw InvalidArgument(
        "fidelity_sweep: need samples >= 2, or exactly 1 for a collapsed range");
  }
  if (lo < 0.0 || (gamma && lo <= 0.0)) {
    throw InvalidArgument("fidelity_sweep: k/k0 must be > 0");
  }
  const Geometry geometry = regime.geometry();
  const double step = samples > 1 ? (hi - lo) / (samples - 1) : 0.0;

  FidelityCurve curve;
  curve.regime = regime;
  curve.gamma = gamma;
  curve.samples = kernels::map_parallel<FidelitySample>(
      static_cast<std::size_t>(samples), [&](std::size_t i) {
        const double x = (i + 1 == static_cast<std::size_t>(samples) && samples > 1)
                             ? hi
                             : lo + step * static_cast<double>(i);
        const double k = x * regime.k0;
        const double f = gamma ? finite_gamma_fidelity(regime, *gamma, k)
                               : fidelity_closed_form(k, geometry);
        return FidelitySample{x, f};
      });
  curve.window_half_width = symmetric_window(curve.samples, threshold);
  curve.monotone_near_k0 =
      monotone_away_from_peak(curve.samples, curve.window_half_width);
  return curve;
}

}  // namespace mirrorgate::gate
