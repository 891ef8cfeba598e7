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

#include "mirrorgate/types.hpp"

#include <cmath>

namespace mirrorgate {

Wavevector::Wavevector(double k) : k_(k) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw InvalidArgument("wave vector must be finite and > 0, got " +
                          std::to_string(k));
  }
}

Geometry::Geometry(double x2, double x3) : x2_(x2), x3_(x3) {
  if (!std::isfinite(x2) || !std::isfinite(x3)) {
    throw InvalidArgument("Geometry: positions must be finite");
  }
  if (!(x2 > 0.0)) {
    throw InvalidArgument("Geometry: invariant 0 < x2 violated (x2 = " +
                          std::to_string(x2) + ")");
  }
  if (!(x3 > x2)) {
    throw InvalidArgument("Geometry: invariant x2 < x3 violated (x2 = " +
                          std::to_string(x2) + ", x3 = " + std::to_string(x3) +
                          ")");
  }
}

double Photonic::effective_coupling() const { return std::sqrt(2.0) * coupling; }

CouplingModel::CouplingModel(Massive m) : model_(m) {
  if (!std::isfinite(m.mass) || m.mass <= 0.0) {
    throw InvalidArgument("Massive: mass must be > 0");
  }
  if (!std::isfinite(m.barrier) || m.barrier < 0.0) {
    throw InvalidArgument("Massive: barrier Gamma must be >= 0");
  }
}

CouplingModel::CouplingModel(Photonic p) : model_(p) {
  if (!std::isfinite(p.velocity) || p.velocity <= 0.0) {
    throw InvalidArgument("Photonic: group velocity must be > 0");
  }
  if (!std::isfinite(p.coupling) || p.coupling < 0.0) {
    throw InvalidArgument("Photonic: coupling J must be >= 0");
  }
  if (!std::isfinite(p.omega0) || p.omega0 < 0.0) {
    throw InvalidArgument("Photonic: omega0 must be >= 0");
  }
}

CouplingModel CouplingModel::massive_with_gamma(double gamma, double k0,
                                                double mass) {
  return CouplingModel(Massive{mass, gamma * k0 / mass});
}

namespace {

double photonic_detuning(const Photonic& p, double k) {
  const double detuning = p.velocity * k - p.omega0;
  if (detuning == 0.0) {
    throw PoleError(
        "photonic strength has a pole at v k = omega0; pass a finite detuning "
        "(see detuning_for_gamma)");
  }
  return detuning;
}

}  // namespace

double CouplingModel::gamma(Wavevector k) const {
  if (is_massive()) {
    const auto& m = massive();
    return m.mass * m.barrier / k;
  }
  const auto& p = photonic();
  const double jt = p.effective_coupling();
  if (jt == 0.0) return 0.0;
  return jt * jt / (p.velocity * photonic_detuning(p, k));
}

cplx CouplingModel::gamma_at(cplx k) const {
  if (is_massive()) {
    const auto& m = massive();
    return m.mass * m.barrier / k;
  }
  const auto& p = photonic();
  const double jt = p.effective_coupling();
  if (jt == 0.0) return 0.0;
  return jt * jt / (p.velocity * (p.velocity * k - p.omega0));
}

double CouplingModel::barrier_strength(Wavevector k) const {
  if (is_massive()) return massive().barrier;
  const auto& p = photonic();
  const double jt = p.effective_coupling();
  if (jt == 0.0) return 0.0;
  return jt * jt / photonic_detuning(p, k);
}

double CouplingModel::effective_mass(Wavevector k) const {
  if (is_massive()) return massive().mass;
  return k / photonic().velocity;
}

double CouplingModel::energy(double k) const {
  if (is_massive()) return k * k / (2.0 * massive().mass);
  return photonic().velocity * k;
}

double CouplingModel::group_velocity(double k) const {
  if (is_massive()) return k / massive().mass;
  return photonic().velocity;
}

}  // namespace mirrorgate
