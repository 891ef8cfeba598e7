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

#include <vector>

namespace mirrorgate {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Composite Gauss-Legendre over [a, b]: panels of at most `max_panel` length,
/// `order` nodes each.
QuadratureRule composite_gauss_legendre(double a, double b, double max_panel,
                                        int order);

/// Concatenation of composite rules over consecutive intervals
/// [breaks[0], breaks[1]], [breaks[1], breaks[2]], ...
QuadratureRule piecewise_gauss_legendre(const std::vector<double>& breaks,
                                        double max_panel, int order);

}  // namespace mirrorgate
