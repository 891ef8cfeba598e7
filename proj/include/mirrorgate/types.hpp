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

// Domain value types shared by every module. Units: hbar = 1, lengths in
// units of 1/k0 unless a function says otherwise.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace mirrorgate {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Invalid user input (bad geometry, inadmissible packet, pole, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The photonic strength J~^2/(v(vk - omega0)) diverges at vk = omega0.
class PoleError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A computation that should succeed failed numerically.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-center configuration |alpha1 alpha2>. A center couples to the flying
/// particle only in state 0.
struct SpinConfig {
  int alpha1 = 0;
  int alpha2 = 0;

  constexpr SpinConfig() = default;
  constexpr SpinConfig(int a1, int a2) : alpha1(a1), alpha2(a2) {
    if ((a1 != 0 && a1 != 1) || (a2 != 0 && a2 != 1)) {
      throw InvalidArgument("SpinConfig: each alpha must be 0 or 1");
    }
  }

  constexpr bool first_active() const { return alpha1 == 0; }
  constexpr bool second_active() const { return alpha2 == 0; }

  /// Position in the computational basis {|00>,|01>,|10>,|11>}.
  constexpr int index() const { return 2 * alpha1 + alpha2; }
  static constexpr SpinConfig from_index(int i) { return {i / 2, i % 2}; }

  std::string label() const {
    return std::to_string(alpha1) + std::to_string(alpha2);
  }

  friend constexpr bool operator==(SpinConfig, SpinConfig) = default;
};

/// The four configurations in basis order.
inline constexpr std::array<SpinConfig, 4> kAllConfigs = {
    SpinConfig{0, 0}, SpinConfig{0, 1}, SpinConfig{1, 0}, SpinConfig{1, 1}};

/// Positive, finite wave vector.
class Wavevector {
 public:
  explicit Wavevector(double k);
  double value() const { return k_; }
  operator double() const { return k_; }

 private:
  double k_;
};

/// Centers at x1 = 0 and x2, mirror at x3.
class Geometry {
 public:
  Geometry(double x2, double x3);

  double x1() const { return 0.0; }
  double x2() const { return x2_; }
  double x3() const { return x3_; }
  double x21() const { return x2_; }
  double x32() const { return x3_ - x2_; }
  double x31() const { return x3_; }

 private:
  double x2_;
  double x3_;
};

struct Massive {
  double mass = 1.0;
  double barrier = 0.0;  // Gamma, height of each contact potential
};

/// Lambda-atom in a waveguide; `coupling` is the per-branch rate J.
struct Photonic {
  double velocity = 1.0;
  double omega0 = 0.0;
  double coupling = 0.0;

  double effective_coupling() const;  // J~ = sqrt(2) J
};

/// Either a massive particle with delta barriers or a photon coupled to
/// Lambda atoms. Both reduce to a dimensionless strength gamma(k).
class CouplingModel {
 public:
  CouplingModel(Massive m);
  CouplingModel(Photonic p);

  /// Massive model whose strength at k0 equals `gamma` (m Gamma / k0 = gamma).
  static CouplingModel massive_with_gamma(double gamma, double k0,
                                          double mass = 1.0);

  bool is_massive() const { return std::holds_alternative<Massive>(model_); }
  bool is_photonic() const { return !is_massive(); }
  const Massive& massive() const { return std::get<Massive>(model_); }
  const Photonic& photonic() const { return std::get<Photonic>(model_); }

  /// gamma(k) = m Gamma / k or J~^2 / (v (v k - omega0)).
  double gamma(Wavevector k) const;
  /// Analytic continuation of gamma(k) to complex k.
  cplx gamma_at(cplx k) const;
  /// Gamma, or the photonic effective Gamma_eff = J~^2 / (v k - omega0).
  double barrier_strength(Wavevector k) const;
  /// m, or m_eff = k / v.
  double effective_mass(Wavevector k) const;
  /// E = k^2 / 2m or v k.
  double energy(double k) const;
  /// k / m or v.
  double group_velocity(double k) const;

 private:
  std::variant<Massive, Photonic> model_;
};

}  // namespace mirrorgate
