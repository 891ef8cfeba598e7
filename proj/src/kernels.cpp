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

#include "mirrorgate/kernels.hpp"

#include <cmath>

namespace mirrorgate::kernels {

namespace {

std::vector<cplx> time_weights(const SpectralBasis& basis, double t) {
  std::vector<cplx> c(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    c[j] = basis.weight[j] * std::polar(1.0, -basis.energy[j] * t);
  }
  return c;
}

int region(const SpectralBasis& basis, double x) {
  if (x < 0.0) return 0;
  if (x < basis.x2) return 1;
  return 2;
}

// One output point: the inner k-loop shared by both drivers.
inline void accumulate(const SpectralBasis& basis, const std::vector<cplx>& c,
                       double x, cplx& plus, cplx& minus) {
  const int reg = region(basis, x);
  const cplx* cp = basis.plus[reg].data();
  const cplx* cm = basis.minus[reg].data();
  double pr = 0.0, pi = 0.0, mr = 0.0, mi = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const double s = std::sin(basis.k[j] * x);
    const double co = std::cos(basis.k[j] * x);
    const cplx wp = c[j] * cp[j];
    const cplx wm = c[j] * cm[j];
    // wp e^{ikx}, wm e^{-ikx}
    pr += wp.real() * co - wp.imag() * s;
    pi += wp.real() * s + wp.imag() * co;
    mr += wm.real() * co + wm.imag() * s;
    mi += wm.imag() * co - wm.real() * s;
  }
  plus = {pr, pi};
  minus = {mr, mi};
}

}  // namespace

namespace serial {

void synthesize(const SpectralBasis& basis, std::span<const double> x, double t,
                FieldComponents& out) {
  const std::vector<cplx> c = time_weights(basis, t);
  out.plus.assign(x.size(), cplx{});
  out.minus.assign(x.size(), cplx{});
  for (std::size_t i = 0; i < x.size(); ++i) {
    accumulate(basis, c, x[i], out.plus[i], out.minus[i]);
  }
}

}  // namespace serial

namespace parallel {

void synthesize(const SpectralBasis& basis, std::span<const double> x, double t,
                FieldComponents& out) {
  const std::vector<cplx> c = time_weights(basis, t);
  out.plus.assign(x.size(), cplx{});
  out.minus.assign(x.size(), cplx{});
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    accumulate(basis, c, x[i], out.plus[i], out.minus[i]);
  }
}

}  // namespace parallel

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mirrorgate::kernels
