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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "mirrorgate/gate_analysis.hpp"
#include "mirrorgate/scattering.hpp"
#include "test_support.hpp"

using namespace mirrorgate;
using mirrorgate::test::uniform;

namespace {

constexpr cplx kI{0.0, 1.0};

// One delta of strength gamma at distance L in front of the wall (mirror at
// L, barrier at 0): inside Psi = C sin k(x - L), which gives
// r = (i + cot kL + 2 gamma) / (i - cot kL - 2 gamma).
cplx single_barrier_mirror(double gamma, double k, double length) {
  const double c = std::cos(k * length) / std::sin(k * length);
  return (kI + c + 2.0 * gamma) / (kI - c - 2.0 * gamma);
}

}  // namespace

TEST_SUITE("scattering") {
  TEST_CASE("configurations iterate in basis order") {
    REQUIRE(kAllConfigs.size() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(kAllConfigs[i].index() == i);
      CHECK(SpinConfig::from_index(i) == kAllConfigs[i]);
    }
    CHECK(kAllConfigs[0].label() == "00");
    CHECK(kAllConfigs[3].label() == "11");
    CHECK_THROWS_AS(SpinConfig(2, 0), InvalidArgument);
  }

  TEST_CASE("geometry invariants") {
    const Geometry g(2.0, 5.0);
    CHECK(g.x1() == 0.0);
    CHECK(g.x21() == 2.0);
    CHECK(g.x32() == 3.0);
    CHECK(g.x31() == 5.0);
    CHECK_THROWS_WITH_AS(Geometry(2.0, 1.0), doctest::Contains("x2 < x3"), InvalidArgument);
    CHECK_THROWS_WITH_AS(Geometry(-1.0, 1.0), doctest::Contains("0 < x2"), InvalidArgument);
    CHECK_THROWS_AS(Wavevector(0.0), InvalidArgument);
    CHECK_THROWS_AS(Wavevector(-1.0), InvalidArgument);
  }

  TEST_CASE("effective potential follows the configuration") {
    const CouplingModel m(Massive{2.0, 3.0});
    const Geometry g(1.0, 2.0);
    const auto both = effective_potential({0, 0}, m, g, Wavevector(1.0));
    REQUIRE(both.size() == 2);
    CHECK(both[0].position == 0.0);
    CHECK(both[1].position == 1.0);
    CHECK(both[0].strength == 3.0);
    CHECK(effective_potential({0, 1}, m, g, Wavevector(1.0)).size() == 1);
    CHECK(effective_potential({1, 0}, m, g, Wavevector(1.0)).front().position == 1.0);
    CHECK(effective_potential({1, 1}, m, g, Wavevector(1.0)).empty());
  }

  TEST_CASE("strength gamma(k) for both models") {
    const CouplingModel m(Massive{2.0, 3.0});
    CHECK(m.gamma(Wavevector(4.0)) == doctest::Approx(1.5));
    const CouplingModel p(Photonic{2.0, 1.0, 0.5});
    // J~^2 / (v (v k - omega0)) with J~^2 = 2 J^2 = 0.5
    CHECK(p.gamma(Wavevector(1.0)) == doctest::Approx(0.25));
    CHECK_THROWS_AS(p.gamma(Wavevector(0.5)), PoleError);
    CHECK(CouplingModel(Photonic{1.0, 1.0, 0.0}).gamma(Wavevector(1.0)) == 0.0);
    CHECK_THROWS_AS(CouplingModel(Massive{0.0, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(CouplingModel(Massive{1.0, -1.0}), InvalidArgument);
  }

  TEST_CASE("bare mirror: r = -exp(2 i k x3)") {
    const Geometry g(1.3, 2.9);
    for (const double k : {0.3, 1.0, 2.7}) {
      for (const SpinConfig c : kAllConfigs) {
        const auto s = solve_for_strength(c, 0.0, g, Wavevector(k));
        CHECK(std::abs(s.r + std::polar(1.0, 2.0 * k * g.x3())) < 1e-12);
      }
      const auto s = solve_for_strength({1, 1}, 500.0, g, Wavevector(k));
      CHECK(std::abs(s.r + std::polar(1.0, 2.0 * k * g.x3())) < 1e-12);
    }
  }

  TEST_CASE("single active center against the one-barrier cavity") {
    const Geometry g(1.3, 2.9);
    for (const double gamma : {0.0, 0.2, 3.0, 40.0}) {
      for (const double k : {0.4, 1.1, 2.5}) {
        const auto first = solve_for_strength({0, 1}, gamma, g, Wavevector(k));
        CHECK(std::abs(first.r - single_barrier_mirror(gamma, k, g.x31())) < 1e-11);
        // Barrier at x2: translate by x2.
        const auto second = solve_for_strength({1, 0}, gamma, g, Wavevector(k));
        const cplx expected =
            std::polar(1.0, 2.0 * k * g.x2()) * single_barrier_mirror(gamma, k, g.x32());
        CHECK(std::abs(second.r - expected) < 1e-11);
      }
    }
  }

  TEST_CASE("property: unit modulus and small residual on random draws") {
    for (int i = 0; i < 500; ++i) {
      const double x2 = uniform(0.1, 10.0);
      const Geometry g(x2, x2 + uniform(0.1, 10.0));
      const double gamma = uniform(0.0, 1e3);
      const Wavevector k(uniform(0.05, 5.0));
      const SpinConfig c = test::any_config();
      const auto s = solve_for_strength(c, gamma, g, k);
      CHECK(std::abs(std::abs(s.r) - 1.0) < 1e-10);
      CHECK(s.residual < 1e-9);
      CHECK(std::abs(wavefunction_eval(s, g, g.x3())) < 1e-9);
    }
  }

  TEST_CASE("wavefunction is continuous and vanishes at the wall") {
    const Geometry g(1.0, 2.5);
    const auto s = solve_for_strength({0, 0}, 5.0, g, Wavevector(1.7));
    const double eps = 1e-9;
    CHECK(std::abs(wavefunction_eval(s, g, -eps) - wavefunction_eval(s, g, eps)) < 1e-7);
    CHECK(std::abs(wavefunction_eval(s, g, 1.0 - eps) - wavefunction_eval(s, g, 1.0 + eps)) <
          1e-7);
    CHECK(std::abs(wavefunction_eval(s, g, 2.5)) < 1e-12);
    CHECK_THROWS_WITH_AS(wavefunction_eval(s, g, 2.6), doctest::Contains("beyond the mirror"),
                         InvalidArgument);
  }

  TEST_CASE("closed form: literal modulus and reconciled phase") {
    for (int i = 0; i < 300; ++i) {
      const double x2 = uniform(0.1, 10.0);
      const Geometry g(x2, x2 + uniform(0.1, 10.0));
      const double gamma = uniform(0.0, 1e3);
      const Wavevector k(uniform(0.05, 5.0));
      const SpinConfig c = test::any_config();
      const cplx literal = reflection_amplitude_closed_form(c, gamma, g, k);
      CHECK(std::abs(std::abs(literal) - 1.0) < 4e-16);
      const cplx solver = solve_for_strength(c, gamma, g, k).r;
      CHECK(std::abs(reflection_amplitude_reconciled(c, gamma, g, k) - solver) < 1e-9);
    }
  }

  TEST_CASE("open line: single delta and completeness") {
    const CouplingModel m = CouplingModel::massive_with_gamma(2.5, 1.0);
    const double gamma = 2.5;
    const auto one = open_line_scattering({0, 1}, m, 3.0, Wavevector(1.0));
    CHECK(std::abs(one.r - (-kI * gamma / (1.0 + kI * gamma))) < 1e-13);
    CHECK(std::abs(one.t - 1.0 / (1.0 + kI * gamma)) < 1e-13);
    const auto shifted = open_line_scattering({1, 0}, m, 3.0, Wavevector(1.0));
    CHECK(std::abs(shifted.r - std::polar(1.0, 6.0) * one.r) < 1e-13);
    CHECK(std::abs(shifted.t - one.t) < 1e-13);
    const auto none = open_line_scattering({1, 1}, m, 3.0, Wavevector(1.0));
    CHECK(std::abs(none.r) < 1e-15);
    CHECK(std::abs(none.t - 1.0) < 1e-15);

    for (int i = 0; i < 300; ++i) {
      const double k0 = uniform(0.1, 3.0);
      const CouplingModel rm = CouplingModel::massive_with_gamma(uniform(0.0, 1e3), k0);
      const auto res = open_line_operators(rm, uniform(0.1, 10.0), Wavevector(k0));
      CHECK(res.completeness_defect() < 1e-12);
    }
  }

  TEST_CASE("reflection gate at the CZ point") {
    const gate::CZRegime regime = gate::cz_regime(1, 0, 1.0);
    const auto gate = reflection_gate_for_strength(1e3, regime.geometry(), Wavevector(1.0));
    CHECK(gate.max_unitarity_defect < 1e-10);
    const auto s = gate.phase_stripped();
    const double target[4] = {1.0, 1.0, 1.0, -1.0};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(s[i] - target[i]) < 1e-2);
    CHECK(gate.matrix()(2, 2) == gate.entries[2]);
  }

  TEST_CASE("narrow cavity resonance between two strong barriers") {
    // Between two barriers the denominator's real part is
    // -4 gamma - 4 pi gamma^2 delta near k = 1 + delta, so the cavity mode
    // sits at 1 - 1/(pi gamma) up to O(1/gamma^2).
    const double gamma = 1e3;
    const gate::CZRegime regime = gate::cz_regime(1, 0, 1.0);
    const Geometry g = regime.geometry();
    const CouplingModel m = CouplingModel::massive_with_gamma(gamma, 1.0);
    const auto res = find_resonances({0, 0}, m, g, 0.7, 1.3);
    REQUIRE(res.size() == 1);
    CHECK(std::abs(res[0].center - (1.0 - 1.0 / (kPi * gamma))) < 10.0 / (gamma * gamma));
    CHECK(res[0].width > 0.0);
    CHECK(res[0].width < 1e-6);

    // r winds once around the circle across the resonance.
    double total = 0.0;
    double prev = std::arg(solve_stationary_state({0, 0}, m, g,
                                                  Wavevector(res[0].center - 200 * res[0].width))
                               .r);
    for (int i = -199; i <= 200; ++i) {
      const double k = res[0].center + i * res[0].width;
      const double ph = std::arg(solve_stationary_state({0, 0}, m, g, Wavevector(k)).r);
      total += test::phase_gap(ph, prev);
      prev = ph;
    }
    CHECK(std::abs(std::abs(total) - 2.0 * kPi) < 0.1);

    CHECK(find_resonances({1, 1}, m, g, 0.7, 1.3).empty());
  }
}
