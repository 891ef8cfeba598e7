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

#include "mirrorgate/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mirrorgate/linalg.hpp"

namespace mirrorgate {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx phase(double theta) { return std::polar(1.0, theta); }

double delta_of(bool active) { return active ? 1.0 : 0.0; }

}  // namespace

std::vector<Barrier> effective_potential(SpinConfig config,
                                         const CouplingModel& model,
                                         const Geometry& geometry,
                                         Wavevector k) {
  std::vector<Barrier> barriers;
  if (!config.first_active() && !config.second_active()) return barriers;
  const double strength = model.barrier_strength(k);
  if (config.first_active()) barriers.push_back({geometry.x1(), strength});
  if (config.second_active()) barriers.push_back({geometry.x2(), strength});
  return barriers;
}

std::pair<cplx, cplx> ScatteringSolution::region_coefficients(int region) const {
  switch (region) {
    case 0:
      return {cplx{1.0, 0.0}, r};
    case 1:
      return {a1, b1};
    default:
      return {a2, b2};
  }
}

int region_of(const Geometry& geometry, double x) {
  if (x < geometry.x1()) return 0;
  if (x < geometry.x2()) return 1;
  return 2;
}

ScatteringSolution solve_for_strength(SpinConfig config, double gamma,
                                      const Geometry& geometry, Wavevector k) {
  if (!std::isfinite(gamma)) {
    throw InvalidArgument("solve_for_strength: gamma must be finite");
  }
  const double d1 = delta_of(config.first_active());
  const double d2 = delta_of(config.second_active());
  const cplx e2 = phase(k * geometry.x2());
  const cplx e3 = phase(k * geometry.x3());

  // Unknowns (r, a1, b1, a2, b2). Jump rows are divided by k.
  MatrixXc a = MatrixXc::Zero(5, 5);
  VectorXc b = VectorXc::Zero(5);
  // Psi(0-) = Psi(0+):  1 + r = a1 + b1
  a(0, 0) = 1.0;
  a(0, 1) = -1.0;
  a(0, 2) = -1.0;
  b(0) = -1.0;
  // Psi(x2-) = Psi(x2+)
  a(1, 1) = e2;
  a(1, 2) = 1.0 / e2;
  a(1, 3) = -e2;
  a(1, 4) = -1.0 / e2;
  // Psi(x3) = 0
  a(2, 3) = e3;
  a(2, 4) = 1.0 / e3;
  // i(a1 - b1) - i(1 - r) = 2 gamma d1 (1 + r)
  a(3, 0) = kI - 2.0 * gamma * d1;
  a(3, 1) = kI;
  a(3, 2) = -kI;
  b(3) = kI + 2.0 * gamma * d1;
  // i(a2 e2 - b2/e2) - i(a1 e2 - b1/e2) = 2 gamma d2 (a1 e2 + b1/e2)
  a(4, 1) = -kI * e2 - 2.0 * gamma * d2 * e2;
  a(4, 2) = kI / e2 - 2.0 * gamma * d2 / e2;
  a(4, 3) = kI * e2;
  a(4, 4) = -kI / e2;

  const DenseSolve solved = solve_dense(std::move(a), std::move(b));

  ScatteringSolution s;
  s.config = config;
  s.k = k;
  s.gamma = gamma;
  s.r = solved.x(0);
  s.a1 = solved.x(1);
  s.b1 = solved.x(2);
  s.a2 = solved.x(3);
  s.b2 = solved.x(4);
  s.rcond = solved.rcond;
  s.residual = boundary_residual(s, geometry);
  return s;
}

ScatteringSolution solve_stationary_state(SpinConfig config,
                                          const CouplingModel& model,
                                          const Geometry& geometry,
                                          Wavevector k) {
  ScatteringSolution s = solve_for_strength(config, model.gamma(k), geometry, k);
  if (model.is_photonic()) {
    const auto& p = model.photonic();
    const double jt = p.effective_coupling();
    const double detuning = p.velocity * k - p.omega0;
    auto excited = [&](bool active, double x) -> cplx {
      if (!active || jt == 0.0) return 0.0;
      return jt * wavefunction_eval(s, geometry, x) / detuning;
    };
    s.eps1 = excited(config.first_active(), geometry.x1());
    s.eps2 = excited(config.second_active(), geometry.x2());
  }
  return s;
}

cplx wavefunction_eval(const ScatteringSolution& solution,
                       const Geometry& geometry, double x) {
  if (x > geometry.x3()) {
    throw InvalidArgument("wavefunction_eval: x = " + std::to_string(x) +
                          " lies beyond the mirror at x3 = " +
                          std::to_string(geometry.x3()));
  }
  const auto [plus, minus] =
      solution.region_coefficients(region_of(geometry, x));
  return plus * phase(solution.k * x) + minus * phase(-solution.k * x);
}

double boundary_residual(const ScatteringSolution& s, const Geometry& geometry) {
  const double k = s.k;
  auto value = [&](int region, double x) {
    const auto [p, m] = s.region_coefficients(region);
    return p * phase(k * x) + m * phase(-k * x);
  };
  // Derivative divided by k.
  auto slope = [&](int region, double x) {
    const auto [p, m] = s.region_coefficients(region);
    return kI * (p * phase(k * x) - m * phase(-k * x));
  };
  const double x1 = geometry.x1();
  const double x2 = geometry.x2();
  const double d1 = delta_of(s.config.first_active());
  const double d2 = delta_of(s.config.second_active());

  const double res[5] = {
      std::abs(value(0, x1) - value(1, x1)),
      std::abs(value(1, x2) - value(2, x2)),
      std::abs(value(2, geometry.x3())),
      std::abs(slope(1, x1) - slope(0, x1) -
               2.0 * s.gamma * d1 * value(1, x1)),
      std::abs(slope(2, x2) - slope(1, x2) -
               2.0 * s.gamma * d2 * value(1, x2)),
  };
  return *std::max_element(std::begin(res), std::end(res));
}

cplx reflection_amplitude_closed_form(SpinConfig config, double gamma,
                                      const Geometry& geometry, Wavevector k) {
  const double d1 = delta_of(config.first_active());
  const double d2 = delta_of(config.second_active());
  const double kx21 = k * geometry.x21();
  const double kx32 = k * geometry.x32();
  const double kx31 = k * geometry.x31();
  const cplx bracket =
      phase(-kx31) -
      2.0 * gamma * d2 *
          (std::cos(kx21) - (kI + 2.0 * gamma * d1) * std::sin(kx21)) *
          std::sin(kx32) -
      2.0 * gamma * d1 * std::sin(kx31);
  if (bracket == cplx{0.0, 0.0}) {
    throw NumericalError(
        "closed-form reflection phase is undefined: bracket vanishes");
  }
  return -phase(2.0 * std::arg(bracket));
}

cplx reflection_amplitude_reconciled(SpinConfig config, double gamma,
                                     const Geometry& geometry, Wavevector k) {
  return std::conj(reflection_amplitude_closed_form(config, -gamma, geometry, k));
}

std::array<cplx, 4> ReflectionGate::phase_stripped() const {
  std::array<cplx, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = entries[i] / entries[0];
  return out;
}

Eigen::Matrix4cd ReflectionGate::matrix() const {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = entries[i];
  return m;
}

ReflectionGate reflection_gate_for_strength(double gamma,
                                            const Geometry& geometry,
                                            Wavevector k) {
  ReflectionGate gate;
  for (const SpinConfig c : kAllConfigs) {
    const cplx r = solve_for_strength(c, gamma, geometry, k).r;
    gate.entries[c.index()] = r;
    gate.max_unitarity_defect =
        std::max(gate.max_unitarity_defect, std::abs(1.0 - std::abs(r)));
  }
  return gate;
}

ReflectionGate reflection_gate(const CouplingModel& model,
                               const Geometry& geometry, Wavevector k) {
  return reflection_gate_for_strength(model.gamma(k), geometry, k);
}

OpenLineAmplitudes open_line_scattering(SpinConfig config,
                                        const CouplingModel& model, double x2,
                                        Wavevector k) {
  if (!std::isfinite(x2) || x2 <= 0.0) {
    throw InvalidArgument("open_line_scattering: x2 must be > 0");
  }
  const double gamma = model.gamma(k);
  const double d1 = delta_of(config.first_active());
  const double d2 = delta_of(config.second_active());
  const cplx e2 = phase(k * x2);

  // Unknowns (r, a1, b1, t); transmitted wave t e^{ikx} right of x2.
  MatrixXc a = MatrixXc::Zero(4, 4);
  VectorXc b = VectorXc::Zero(4);
  a(0, 0) = 1.0;
  a(0, 1) = -1.0;
  a(0, 2) = -1.0;
  b(0) = -1.0;
  a(1, 0) = kI - 2.0 * gamma * d1;
  a(1, 1) = kI;
  a(1, 2) = -kI;
  b(1) = kI + 2.0 * gamma * d1;
  a(2, 1) = e2;
  a(2, 2) = 1.0 / e2;
  a(2, 3) = -e2;
  // i t e2 - i(a1 e2 - b1/e2) = 2 gamma d2 t e2
  a(3, 1) = -kI * e2;
  a(3, 2) = kI / e2;
  a(3, 3) = kI * e2 - 2.0 * gamma * d2 * e2;

  const DenseSolve solved = solve_dense(std::move(a), std::move(b));
  return {solved.x(0), solved.x(3)};
}

OpenLineResult open_line_operators(const CouplingModel& model, double x2,
                                   Wavevector k) {
  OpenLineResult out;
  for (const SpinConfig c : kAllConfigs) {
    out.amplitudes[c.index()] = open_line_scattering(c, model, x2, k);
  }
  return out;
}

Eigen::Matrix4cd OpenLineResult::reflection() const {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = amplitudes[i].r;
  return m;
}

Eigen::Matrix4cd OpenLineResult::transmission() const {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = amplitudes[i].t;
  return m;
}

double OpenLineResult::completeness_defect() const {
  const Eigen::Matrix4cd r = reflection();
  const Eigen::Matrix4cd t = transmission();
  const Eigen::Matrix4cd sum =
      r * r.adjoint() + t * t.adjoint() - Eigen::Matrix4cd::Identity();
  return sum.cwiseAbs().maxCoeff();
}

}  // namespace mirrorgate

namespace mirrorgate {

namespace {

// Denominator of r in the solver convention, continued to complex k:
// r = -exp{2i arg D} on the real axis, with
// D = e^{ikx31} + 2 gamma d2 (cos kx21 + (i + 2 gamma d1) sin kx21) sin kx32
//     + 2 gamma d1 sin kx31.
cplx reflection_denominator(SpinConfig config, const CouplingModel& model,
                            const Geometry& geometry, cplx k) {
  const cplx g = model.gamma_at(k);
  const double d1 = config.first_active() ? 1.0 : 0.0;
  const double d2 = config.second_active() ? 1.0 : 0.0;
  const cplx kx21 = k * geometry.x21();
  const cplx kx32 = k * geometry.x32();
  const cplx kx31 = k * geometry.x31();
  return std::exp(kI * kx31) +
         2.0 * g * d2 * (std::cos(kx21) + (kI + 2.0 * g * d1) * std::sin(kx21)) *
             std::sin(kx32) +
         2.0 * g * d1 * std::sin(kx31);
}

}  // namespace

std::vector<Resonance> find_resonances(SpinConfig config,
                                       const CouplingModel& model,
                                       const Geometry& geometry, double k_lo,
                                       double k_hi, int scan_points) {
  std::vector<Resonance> found;
  if (!config.first_active() && !config.second_active()) return found;
  if (!(k_hi > k_lo) || scan_points < 3) {
    throw InvalidArgument("find_resonances: need k_lo < k_hi and >= 3 points");
  }
  const double step = (k_hi - k_lo) / (scan_points - 1);
  auto f = [&](cplx k) { return reflection_denominator(config, model, geometry, k); };
  auto safe_abs = [&](double k) {
    try {
      return std::abs(f(k));
    } catch (const InvalidArgument&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  std::vector<double> mag(scan_points);
  for (int i = 0; i < scan_points; ++i) mag[i] = safe_abs(k_lo + i * step);

  for (int i = 0; i < scan_points; ++i) {
    const bool left_ok = i == 0 || mag[i] <= mag[i - 1];
    const bool right_ok = i + 1 == scan_points || mag[i] <= mag[i + 1];
    if (!left_ok || !right_ok || !std::isfinite(mag[i])) continue;

    cplx k = k_lo + i * step;
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      const double h = 1e-7 * std::abs(k);
      const cplx value = f(k);
      const cplx slope = (f(k + h) - f(k - h)) / (2.0 * h);
      if (slope == cplx{}) break;
      const cplx next = k - value / slope;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      if (std::abs(next - k) <= 1e-14 * std::abs(k)) {
        k = next;
        converged = true;
        break;
      }
      k = next;
    }
    if (!converged) continue;
    const Resonance res{k.real(), std::abs(k.imag())};
    if (res.center < k_lo || res.center > k_hi || res.width >= k_hi - k_lo) continue;
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const Resonance& o) {
      return std::abs(o.center - res.center) <= 1e-9 * std::abs(res.center) + res.width;
    });
    if (!duplicate) found.push_back(res);
  }
  std::sort(found.begin(), found.end(),
            [](const Resonance& a, const Resonance& b) { return a.center < b.center; });
  return found;
}

}  // namespace mirrorgate
