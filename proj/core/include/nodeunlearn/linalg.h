// Copyright 2026 The nodeunlearn Authors.
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

#ifndef NODEUNLEARN_LINALG_H_
#define NODEUNLEARN_LINALG_H_

#include <vector>

#include "nodeunlearn/matrix.h"

namespace nodeunlearn {

// Thin singular value decomposition a = u * diag(s) * v^T with
// k = min(rows, cols) singular values sorted in descending order.
// u is rows x k, v is cols x k.
struct Svd {
  Matrix u;
  std::vector<double> singular_values;
  Matrix v;
};

inline constexpr int kDefaultJacobiSweeps = 80;
inline constexpr double kDefaultPinvTolerance = 1e-10;

// One-sided (Hestenes) Jacobi SVD. Throws NumericalError if the columns are
// not mutually orthogonal after `max_sweeps` sweeps, or on non-finite input.
Svd JacobiSvd(const Matrix& a, int max_sweeps = kDefaultJacobiSweeps);

// Moore-Penrose pseudoinverse. Singular values at or below
// `relative_tolerance * sigma_max` are treated as zero.
Matrix PseudoInverse(const Matrix& a,
                     double relative_tolerance = kDefaultPinvTolerance);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_LINALG_H_
