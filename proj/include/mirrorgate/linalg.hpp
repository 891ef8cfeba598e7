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

#include <Eigen/Dense>

#include "mirrorgate/types.hpp"

namespace mirrorgate {

using MatrixXc = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXc = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

struct DenseSolve {
  VectorXc x;
  double rcond = 0.0;  // reciprocal condition estimate of the equilibrated system
};

// Solves A x = b by LU with partial pivoting after scaling each row to unit
// max-norm. Throws NumericalError if the system is numerically singular.
DenseSolve solve_dense(MatrixXc a, VectorXc b);

}  // namespace mirrorgate
