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

#include "mirrorgate/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mirrorgate {

DenseSolve solve_dense(MatrixXc a, VectorXc b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double scale = a.row(i).cwiseAbs().maxCoeff();
    if (scale == 0.0) {
      throw NumericalError("singular scattering system: zero row " +
                           std::to_string(i));
    }
    a.row(i) /= scale;
    b(i) /= scale;
  }
  Eigen::PartialPivLU<MatrixXc> lu(a);
  const double rcond = lu.rcond();
  if (!(rcond > 64.0 * std::numeric_limits<double>::epsilon())) {
    throw NumericalError("singular scattering system (rcond estimate " +
                         std::to_string(rcond) + ")");
  }
  return {lu.solve(b), rcond};
}

}  // namespace mirrorgate
