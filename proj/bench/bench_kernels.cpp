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

// Serial vs OpenMP timings of the two hot kernels: stationary-state assembly
// over the spectral window and field synthesis on the position grid.

#include <chrono>
#include <cstdio>
#include <vector>

#include "mirrorgate/gate_analysis.hpp"
#include "mirrorgate/kernels.hpp"
#include "mirrorgate/wavepacket.hpp"

namespace {

using namespace mirrorgate;
using Clock = std::chrono::steady_clock;

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    f();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    best = std::min(best, s);
  }
  return best;
}

}  // namespace

int main() {
  const gate::CZRegime regime = gate::cz_regime(1, 0, 1.0);
  const Geometry geom = regime.geometry();
  const CouplingModel model = CouplingModel::massive_with_gamma(1000.0, 1.0);
  const wavepacket::GaussianPacket packet(-80.0, 1.0, 0.05);
  const wavepacket::BranchBasis basis =
      wavepacket::branch_basis(packet, SpinConfig{0, 0}, model, geom);

  std::vector<double> x;
  const double h = wavepacket::max_grid_spacing(packet) / 4.0;
  for (double v = -200.0; v <= geom.x3(); v += h) x.push_back(v);
  const double t = 60.0;

  std::printf("threads: %d, k nodes: %zu, x points: %zu\n", kernels::max_threads(),
              basis.basis.k.size(), x.size());

  kernels::FieldComponents a, b;
  const double s_syn = best_of(5, [&] { kernels::serial::synthesize(basis.basis, x, t, a); });
  const double p_syn = best_of(5, [&] { kernels::parallel::synthesize(basis.basis, x, t, b); });
  double diff = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) diff = std::max(diff, std::abs(a.total(i) - b.total(i)));
  std::printf("synthesize  serial %.4f s  parallel %.4f s  speedup %.2fx  max diff %.1e\n",
              s_syn, p_syn, s_syn / p_syn, diff);

  const std::vector<double> ks = basis.basis.k;
  auto solve = [&](std::size_t j) {
    return solve_stationary_state(SpinConfig{0, 0}, model, geom, Wavevector(ks[j])).r;
  };
  std::vector<cplx> rs, rp;
  const double s_map = best_of(5, [&] { rs = kernels::map_serial<cplx>(ks.size(), solve); });
  const double p_map = best_of(5, [&] { rp = kernels::map_parallel<cplx>(ks.size(), solve); });
  std::printf("solve map   serial %.4f s  parallel %.4f s  speedup %.2fx  identical %s\n",
              s_map, p_map, s_map / p_map, rs == rp ? "yes" : "no");
  return 0;
}
