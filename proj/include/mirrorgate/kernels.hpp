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

// Data-parallel inner loops. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel; the two must
// agree to rounding (tests/unit/test_kernels.cpp) and bench/ compares their speed.

#include <array>
#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mirrorgate/types.hpp"

namespace mirrorgate::kernels {

/// Stationary states on a k quadrature, ready for synthesis
///   psi_+-(x, t) = sum_j weight_j e^{-i E_j t} coeff_+-[region(x)][j] e^{+-i k_j x}.
struct SpectralBasis {
  std::vector<double> k;
  std::vector<double> energy;
  std::vector<cplx> weight;
  std::array<std::vector<cplx>, 3> plus;
  std::array<std::vector<cplx>, 3> minus;
  double x2 = 0.0;  // region boundaries; x1 = 0
  double x3 = 0.0;

  std::size_t size() const { return k.size(); }
};

/// Right- and left-moving parts of a field sampled at a set of points.
struct FieldComponents {
  std::vector<cplx> plus;
  std::vector<cplx> minus;

  cplx total(std::size_t i) const { return plus[i] + minus[i]; }
};

namespace serial {

void synthesize(const SpectralBasis& basis, std::span<const double> x, double t,
                FieldComponents& out);

}  // namespace serial

namespace parallel {

void synthesize(const SpectralBasis& basis, std::span<const double> x, double t,
                FieldComponents& out);

}  // namespace parallel

/// out[i] = f(i), sequentially.
template <class T, class F>
std::vector<T> map_serial(std::size_t n, F&& f) {
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

/// out[i] = f(i) with the index range split across threads. `f` must be a
/// pure function of i; the first exception thrown is rethrown after the loop.
template <class T, class F>
std::vector<T> map_parallel(std::size_t n, F&& f) {
  std::vector<T> out(n);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      out[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(mirrorgate_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

int max_threads();

}  // namespace mirrorgate::kernels
