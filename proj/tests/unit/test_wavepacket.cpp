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

#include "mirrorgate/photonic.hpp"
#include "mirrorgate/wavepacket.hpp"
#include "test_support.hpp"

using namespace mirrorgate;
using namespace mirrorgate::wavepacket;

namespace {

const gate::CZRegime kRegime = gate::cz_regime(1, 0, 1.0);

double reconstruction_error(const PacketEvolution& ev, const GaussianPacket& p) {
  const double h = ev.x[1] - ev.x[0];
  double e2 = 0.0;
  for (std::size_t i = 0; i < ev.x.size(); ++i) {
    e2 += std::norm(ev.snapshots[0][i] - p.amplitude(ev.x[i])) * h;
  }
  return std::sqrt(e2);
}

}  // namespace

TEST_SUITE("wavepacket") {
  TEST_CASE("admissibility names the violated condition") {
    CHECK_NOTHROW(GaussianPacket(-80.0, 1.0, 0.05));
    CHECK_THROWS_WITH_AS(GaussianPacket(-20.0, 1.0, 0.05), doctest::Contains("|x1 - x0| >= 3 dx"),
                         InvalidArgument);
    CHECK_THROWS_WITH_AS(GaussianPacket(-80.0, 0.1, 0.05), doctest::Contains("k0 >= 3 dk"),
                         InvalidArgument);
    CHECK_THROWS_AS(GaussianPacket(10.0, 1.0, 0.05), InvalidArgument);
    CHECK_THROWS_AS(GaussianPacket(-80.0, 1.0, 0.0), InvalidArgument);
    const GaussianPacket p = gaussian_packet(-80.0, 1.0, 0.05);
    CHECK(p.dx() == doctest::Approx(10.0));
  }

  TEST_CASE("spectrum is normalized and matches the stationary overlap") {
    const GaussianPacket p(-80.0, 1.0, 0.05);
    const SpectralWindow w = spectral_window(p);
    double mass = 0.0;
    for (std::size_t j = 0; j < w.rule.nodes.size(); ++j) {
      mass += w.rule.weights[j] * std::norm(p.spectrum(w.rule.nodes[j]));
    }
    CHECK(std::abs(mass + w.truncated_mass - 1.0) < 1e-12);
    CHECK(w.truncated_mass < 1e-8);
    CHECK(p.negative_k_weight() < 1e-80);
    CHECK(std::abs(spectral_overlap(p, 1.02) - p.spectrum(1.02)) == 0.0);

    const Geometry g = kRegime.geometry();
    const CouplingModel m = CouplingModel::massive_with_gamma(1e3, 1.0);
    for (const double k : {0.95, 1.0, 1.05}) {
      const auto s = solve_stationary_state({1, 1}, m, g, Wavevector(k));
      CHECK(std::abs(measured_overlap(p, s, g) - p.spectrum(k)) < 1e-6);
    }
  }

  TEST_CASE("resonance-graded spectral window") {
    const GaussianPacket p(-80.0, 1.0, 0.05);
    const Geometry g = kRegime.geometry();
    const CouplingModel m = CouplingModel::massive_with_gamma(1e3, 1.0);
    const auto res = window_resonances(p, m, g, {SpinConfig{0, 0}});
    REQUIRE(res.size() == 1);
    const SpectralWindow w = spectral_window(p, {}, res);
    CHECK(w.refined == 1);
    CHECK(w.rule.nodes.size() > 401);
    double total = 0.0;
    for (const double x : w.rule.weights) total += x;
    CHECK(total == doctest::Approx(w.hi - w.lo).epsilon(1e-13));
    CHECK(window_resonances(p, m, g, {SpinConfig{1, 1}}).empty());
    QuadratureSpec off;
    off.refine_resonances = false;
    CHECK(window_resonances(p, m, g, {SpinConfig{0, 0}}, off).empty());
  }

  TEST_CASE("evolution: reconstruction, conservation and the hard wall") {
    const GaussianPacket p(-80.0, 1.0, 0.05);
    const Geometry g = kRegime.geometry();
    const CouplingModel m = CouplingModel::massive_with_gamma(1e3, 1.0);
    const double t_end = scattering_complete_time(p, m, g);
    const std::vector<double> times = {0.0, 40.0, 80.0, 90.0, 100.0, t_end};
    for (const SpinConfig c : kAllConfigs) {
      CAPTURE(c.label());
      const PacketEvolution ev = evolve(p, c, m, g, times);
      CHECK(reconstruction_error(ev, p) < 1e-4);
      CHECK(ev.norm_drift < kNormTolerance);
      CHECK(ev.max_norm_error < kNormTolerance);
      for (const double w : ev.wall_values) CHECK(w < 1e-8);
      CHECK(ev.x.back() == g.x3());
      CHECK(ev.x[1] - ev.x[0] <= max_grid_spacing(p) * (1.0 + 1e-12));
    }
    GridSpec coarse;
    coarse.spacing = 2.0 * max_grid_spacing(p);
    CHECK_THROWS_WITH_AS(evolve(p, SpinConfig{1, 1}, m, g, times, coarse),
                         doctest::Contains("too coarse"), InvalidArgument);
  }

  TEST_CASE("photonic evolution conserves field plus atomic excitation") {
    const GaussianPacket p(-80.0, 1.0, 0.05);
    const Geometry g = kRegime.geometry();
    photonic::LambdaAtomParams atoms(1.0, 0.0, 0.5);
    atoms.omega0 = 1.0 - photonic::detuning_for_gamma(atoms, 1e3);
    const CouplingModel m = atoms.model();
    const double t_end = scattering_complete_time(p, m, g);
    CHECK(t_end == doctest::Approx(2.0 * g.x3() + 80.0 + 30.0));
    for (const SpinConfig c : kAllConfigs) {
      const PacketEvolution ev = evolve(p, c, m, g, {0.0, 85.0, t_end});
      CHECK(ev.norm_drift < kNormTolerance);
      CHECK(ev.max_norm_error < kNormTolerance);
    }
  }

  TEST_CASE("packet fidelity: narrow-band limit and the 5% packet") {
    double previous = 0.0;
    for (const double dk : {0.1, 0.05, 0.02, 0.005}) {
      const GaussianPacket p(-8.0 * 0.5 / dk, 1.0, dk);
      const double f = packet_gate_fidelity(p, kRegime, std::nullopt);
      CHECK(f > previous);
      previous = f;
      if (dk == 0.05) CHECK(f >= 0.95);
    }
    CHECK(previous > 0.999);
    const GaussianPacket off_carrier(-80.0, 1.1, 0.05);
    CHECK_THROWS_AS(packet_gate_fidelity(off_carrier, kRegime, std::nullopt), InvalidArgument);
  }

  TEST_CASE("time-domain fidelity agrees with the k-space average") {
    const GaussianPacket p(-80.0, 1.0, 0.05);
    const CouplingModel m = CouplingModel::massive_with_gamma(1e3, 1.0);
    const double fk = packet_gate_fidelity(p, kRegime, m);
    const double ft = time_domain_gate_fidelity(p, kRegime, m);
    CHECK(std::abs(fk - ft) < 1e-3);
    CHECK(std::abs(fk - packet_gate_fidelity(p, kRegime, 1e3)) < 1e-15);
    // gamma -> infinity limit
    CHECK(std::abs(fk - packet_gate_fidelity(p, kRegime, std::nullopt)) < 1e-4);
  }

  TEST_CASE("branch overlaps and the conditional qubit state") {
    const GaussianPacket p(-80.0, 1.0, 0.05);
    const Geometry g = kRegime.geometry();
    const CouplingModel m = CouplingModel::massive_with_gamma(1e3, 1.0);
    const double t = scattering_complete_time(p, m, g);
    const Eigen::Matrix4cd gram = branch_gram(p, m, g, t);
    CHECK((gram - gram.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    for (int a = 0; a < 4; ++a) {
      CHECK(std::abs(gram(a, a) - 1.0) < 1e-6);
      for (int b = 0; b < 4; ++b) CHECK(std::abs(gram(a, b)) <= 1.0 + 1e-6);
    }

    const std::array<cplx, 4> plus = {0.5, 0.5, 0.5, 0.5};
    const ConditionalState s = conditional_evolution(p, plus, m, g, t);
    CHECK(std::abs(s.rho.trace() - 1.0) < 1e-6);
    CHECK(s.purity <= 1.0 + 1e-9);
    CHECK(s.purity > 0.9);
    CHECK(s.excited_population == 0.0);
    CHECK_THROWS_AS(conditional_evolution(p, {1.0, 1.0, 0.0, 0.0}, m, g, t), InvalidArgument);
  }

  TEST_CASE("durations") {
    const CouplingModel m(Massive{1.0, 1.0});
    const DurationReport d = gate_duration(GaussianPacket(-80.0, 1.0, 0.05), m);
    CHECK(d.dtau == doctest::Approx(20.0));
    CHECK(d.dtau_min == doctest::Approx(10.0));
    CHECK(d.order_of_magnitude);
    const DurationReport half = gate_duration(GaussianPacket(-160.0, 1.0, 0.025), m);
    CHECK(half.dtau == doctest::Approx(2.0 * d.dtau));

    const CouplingModel photon(Photonic{2.5, 0.0, 1.0});
    const GaussianPacket p(-80.0, 1.0, 0.05);
    const DurationReport dp = gate_duration(p, photon);
    CHECK(dp.dtau * p.dk() * 2.5 == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("working condition") {
    const MaterialPreset gaas = material_preset("gaas");
    const MaterialPreset diamond = material_preset("diamond");
    const double tg = working_condition(gaas.group_velocity(), gaas.wavelength);
    const double td = working_condition(diamond.group_velocity(), diamond.wavelength);
    CHECK(std::abs(tg / 1.6e-14 - 1.0) < 0.1);
    CHECK(std::abs(td / 8e-15 - 1.0) < 0.1);
    CHECK(working_condition(1.0, 2.0 * kPi) == doctest::Approx(10.0));
    CHECK_THROWS_AS(material_preset("silicon"), InvalidArgument);
    CHECK_THROWS_AS(working_condition(0.0, 1.0), InvalidArgument);
  }
}
