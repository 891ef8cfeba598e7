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

#include "mirrorgate/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "mirrorgate/types.hpp"

namespace mirrorgate {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be >= 1");
  if (!(b > a)) throw InvalidArgument("gauss_legendre: need a < b");
  std::unique_ptr<gsl_integration_glfixed_table,
                  decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw NumericalError("gauss_legendre: table allocation failed");

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &rule.nodes[i],
                                  &rule.weights[i], table.get());
  }
  return rule;
}

QuadratureRule composite_gauss_legendre(double a, double b, double max_panel,
                                        int order) {
  if (!(max_panel > 0.0)) {
    throw InvalidArgument("composite_gauss_legendre: panel length must be > 0");
  }
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
  const double h = (b - a) / panels;
  const QuadratureRule ref = gauss_legendre(order, 0.0, h);
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
  rule.weights.reserve(rule.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * h;
    for (int i = 0; i < order; ++i) {
      rule.nodes.push_back(left + ref.nodes[i]);
      rule.weights.push_back(ref.weights[i]);
    }
  }
  return rule;
}

QuadratureRule piecewise_gauss_legendre(const std::vector<double>& breaks,
                                        double max_panel, int order) {
  QuadratureRule rule;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    const QuadratureRule piece =
        composite_gauss_legendre(breaks[i], breaks[i + 1], max_panel, order);
    rule.nodes.insert(rule.nodes.end(), piece.nodes.begin(), piece.nodes.end());
    rule.weights.insert(rule.weights.end(), piece.weights.begin(),
                        piece.weights.end());
  }
  return rule;
}

}  // namespace mirrorgate
