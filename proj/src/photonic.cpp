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

#include "mirrorgate/photonic.hpp"

#include <algorithm>
#include <cmath>

#include "mirrorgate/linalg.hpp"

namespace mirrorgate::photonic {

namespace {

constexpr cplx kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Uncoupled atoms (J = 0) have no pole.
void require_off_resonance(const LambdaAtomParams& p, double k) {
  if (p.coupling != 0.0 && p.velocity * k == p.omega0) {
    throw PoleError("photonic pole: v k = omega0 at k = " + std::to_string(k) +
                    "; use detuning_for_gamma to pick a finite detuning");
  }
}

}  // namespace

LambdaAtomParams::LambdaAtomParams(double v, double w0, double j)
    : velocity(v), omega0(w0), coupling(j) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw InvalidArgument("LambdaAtomParams: v must be > 0");
  }
  if (!std::isfinite(j) || j < 0.0) {
    throw InvalidArgument("LambdaAtomParams: J must be >= 0");
  }
  if (!std::isfinite(w0) || w0 < 0.0) {
    throw InvalidArgument("LambdaAtomParams: omega0 must be >= 0");
  }
}

double LambdaAtomParams::effective_coupling() const {
  return std::sqrt(2.0) * coupling;
}

CouplingModel LambdaAtomParams::model() const {
  return CouplingModel(Photonic{velocity, omega0, coupling});
}

GroundDoubletState::GroundDoubletState(cplx g0, cplx g1) : g0_(g0), g1_(g1) {
  const double norm = std::norm(g0) + std::norm(g1);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw InvalidArgument("GroundDoubletState: state must be normalized");
  }
}

std::pair<cplx, cplx> bright_dark_transform(const GroundDoubletState& s) {
  return {(s.g0() + s.g1()) * kInvSqrt2, (s.g0() - s.g1()) * kInvSqrt2};
}

GroundDoubletState bright_dark_inverse(cplx c_plus, cplx c_minus) {
  return {(c_plus + c_minus) * kInvSqrt2, (c_plus - c_minus) * kInvSqrt2};
}

EffectiveCoupling effective_coupling(const LambdaAtomParams& params,
                                     Wavevector k) {
  EffectiveCoupling out;
  out.mass = k / params.velocity;
  const double jt = params.effective_coupling();
  if (jt == 0.0) return out;
  require_off_resonance(params, k);
  out.barrier = jt * jt / (params.velocity * k - params.omega0);
  out.gamma = out.mass * out.barrier / k;
  return out;
}

double detuning_for_gamma(const LambdaAtomParams& params, double gamma_eff) {
  if (!std::isfinite(gamma_eff) || gamma_eff == 0.0) {
    throw InvalidArgument("detuning_for_gamma: gamma_eff must be finite and nonzero");
  }
  const double jt = params.effective_coupling();
  return jt * jt / (params.velocity * gamma_eff);
}

ScatteringSolution photonic_stationary_state(SpinConfig config,
                                             const LambdaAtomParams& params,
                                             const Geometry& geometry,
                                             Wavevector k) {
  require_off_resonance(params, k);
  const double jt = params.effective_coupling();
  const double v = params.velocity;
  // With J = 0 and v k = omega0 the atomic rows only fix eps = 0.
  const double detuning = v * k != params.omega0 ? v * k - params.omega0 : 1.0;
  const double d1 = config.first_active() ? 1.0 : 0.0;
  const double d2 = config.second_active() ? 1.0 : 0.0;
  const cplx e2 = std::polar(1.0, k * geometry.x2());
  const cplx e3 = std::polar(1.0, k * geometry.x3());
  const cplx hop = kI * jt / v;

  // Unknowns (r, a1, b1, a2, b2, eps1, eps2).
  MatrixXc a = MatrixXc::Zero(7, 7);
  VectorXc b = VectorXc::Zero(7);
  // psi_+ at x1: a1 - 1 = -i (J~/v) d1 eps1
  a(0, 1) = 1.0;
  a(0, 5) = hop * d1;
  b(0) = 1.0;
  // psi_- at x1: b1 - r = +i (J~/v) d1 eps1
  a(1, 2) = 1.0;
  a(1, 0) = -1.0;
  a(1, 5) = -hop * d1;
  // psi_+ at x2: (a2 - a1) e2 = -i (J~/v) d2 eps2
  a(2, 3) = e2;
  a(2, 1) = -e2;
  a(2, 6) = hop * d2;
  // psi_- at x2: (b2 - b1) / e2 = +i (J~/v) d2 eps2
  a(3, 4) = 1.0 / e2;
  a(3, 2) = -1.0 / e2;
  a(3, 6) = -hop * d2;
  // hard wall
  a(4, 3) = e3;
  a(4, 4) = 1.0 / e3;
  // (v k - omega0) eps1 = J~ d1 psi(x1), psi(x1) = 1 + r
  a(5, 5) = detuning;
  a(5, 0) = -jt * d1;
  b(5) = jt * d1;
  // (v k - omega0) eps2 = J~ d2 psi(x2), psi(x2) = a1 e2 + b1 / e2
  a(6, 6) = detuning;
  a(6, 1) = -jt * d2 * e2;
  a(6, 2) = -jt * d2 / e2;

  const MatrixXc system = a;
  const VectorXc rhs = b;
  const DenseSolve solved = solve_dense(std::move(a), std::move(b));

  ScatteringSolution s;
  s.config = config;
  s.k = k;
  s.gamma = effective_coupling(params, k).gamma;
  s.r = solved.x(0);
  s.a1 = solved.x(1);
  s.b1 = solved.x(2);
  s.a2 = solved.x(3);
  s.b2 = solved.x(4);
  s.eps1 = solved.x(5);
  s.eps2 = solved.x(6);
  s.rcond = solved.rcond;
  s.residual = (system * solved.x - rhs).cwiseAbs().maxCoeff();
  return s;
}

EquivalenceReport verify_equivalence(const LambdaAtomParams& params,
                                     const Geometry& geometry,
                                     const std::vector<double>& k_grid) {
  if (k_grid.empty()) {
    throw InvalidArgument("verify_equivalence: empty k grid");
  }
  for (const double k : k_grid) {
    Wavevector checked(k);
    require_off_resonance(params, checked);
  }
  EquivalenceReport report;
  for (const double kv : k_grid) {
    const Wavevector k(kv);
    const double gamma = effective_coupling(params, k).gamma;
    for (const SpinConfig c : kAllConfigs) {
      const cplx rp = photonic_stationary_state(c, params, geometry, k).r;
      const cplx rm = solve_for_strength(c, gamma, geometry, k).r;
      report.max_deviation = std::max(report.max_deviation, std::abs(rp - rm));
      report.max_unitarity_defect =
          std::max(report.max_unitarity_defect, std::abs(1.0 - std::abs(rp)));
      ++report.points;
    }
  }
  report.passed = report.max_deviation < kEquivalenceTolerance;
  return report;
}

}  // namespace mirrorgate::photonic
