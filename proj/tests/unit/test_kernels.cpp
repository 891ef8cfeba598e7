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
#include <stdexcept>
#include <vector>

#include "mirrorgate/kernels.hpp"
#include "mirrorgate/quadrature.hpp"
#include "mirrorgate/wavepacket.hpp"
#include "test_support.hpp"

using namespace mirrorgate;

TEST_SUITE("kernels") {
  TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const QuadratureRule r = gauss_legendre(8, -1.0, 3.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      acc += r.weights[i] * std::pow(r.nodes[i], 15);
    }
    // integral of x^15 over [-1, 3] = (3^16 - 1) / 16
    CHECK(acc == doctest::Approx((std::pow(3.0, 16) - 1.0) / 16.0).epsilon(1e-13));

    const QuadratureRule c = piecewise_gauss_legendre({0.0, 1.0, 4.0}, 0.5, 6);
    CHECK(c.nodes.size() == 8 * 6);
    double s = 0.0;
    for (std::size_t i = 0; i < c.nodes.size(); ++i) s += c.weights[i] * std::cos(c.nodes[i]);
    CHECK(s == doctest::Approx(std::sin(4.0)).epsilon(1e-13));
    const QuadratureRule comp = composite_gauss_legendre(0.0, 1.0, 0.3, 4);
    CHECK(comp.nodes.size() == 4 * 4);
  }

  TEST_CASE("parallel synthesis matches the serial reference") {
    const wavepacket::GaussianPacket p(-80.0, 1.0, 0.05);
    const gate::CZRegime regime = gate::cz_regime(1, 0, 1.0);
    const CouplingModel m = CouplingModel::massive_with_gamma(1e3, 1.0);
    const auto basis = wavepacket::branch_basis(p, SpinConfig{0, 0}, m, regime.geometry());
    std::vector<double> x;
    for (double v = -150.0; v <= regime.geometry().x3(); v += 0.37) x.push_back(v);
    for (const double t : {0.0, 55.0, 110.0}) {
      kernels::FieldComponents a, b;
      kernels::serial::synthesize(basis.basis, x, t, a);
      kernels::parallel::synthesize(basis.basis, x, t, b);
      REQUIRE(a.plus.size() == x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(a.plus[i] == b.plus[i]);
        CHECK(a.minus[i] == b.minus[i]);
      }
    }
  }

  TEST_CASE("ordered map, serial and parallel") {
    auto square = [](std::size_t i) { return static_cast<double>(i * i); };
    const auto s = kernels::map_serial<double>(1000, square);
    const auto p = kernels::map_parallel<double>(1000, square);
    CHECK(s == p);
    CHECK(p[999] == 999.0 * 999.0);
    CHECK(kernels::max_threads() >= 1);
  }

  TEST_CASE("parallel map rethrows worker exceptions") {
    auto bad = [](std::size_t i) -> int {
      if (i == 17) throw NumericalError("node 17");
      return static_cast<int>(i);
    };
    CHECK_THROWS_WITH_AS(kernels::map_parallel<int>(64, bad), "node 17", NumericalError);
  }
}
