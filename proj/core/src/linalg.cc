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

#include "nodeunlearn/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "nodeunlearn/error.h"

namespace nodeunlearn {
namespace {

// SVD of a tall (rows >= cols) matrix. Columns of `a` are rotated in place
// until mutually orthogonal; the accumulated rotations form v.
Svd TallJacobiSvd(const Matrix& a, int max_sweeps) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Column-major working copies: cols[j] is column j of a (length m),
  // vcols[j] is column j of v (length n).
  Matrix cols = a.Transpose();
  Matrix vcols = Matrix::Identity(n);

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double threshold = kEps * static_cast<double>(std::max<std::size_t>(m, 1));

  bool converged = (n < 2);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto cp = cols.row(p);
        auto cq = cols.row(q);
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += cp[i] * cp[i];
          beta += cq[i] * cq[i];
          gamma += cp[i] * cq[i];
        }
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= threshold * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double x = cp[i];
          const double y = cq[i];
          cp[i] = c * x - s * y;
          cq[i] = s * x + c * y;
        }
        auto vp = vcols.row(p);
        auto vq = vcols.row(q);
        for (std::size_t i = 0; i < n; ++i) {
          const double x = vp[i];
          const double y = vq[i];
          vp[i] = c * x - s * y;
          vq[i] = s * x + c * y;
        }
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw NumericalError("JacobiSvd: no convergence after " +
                         std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = Norm2(cols.row(j));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sigma[x] > sigma[y];
  });

  Svd out{Matrix(m, n), std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.singular_values[k] = sigma[j];
    auto col = cols.row(j);
    if (sigma[j] > 0.0) {
      for (std::size_t i = 0; i < m; ++i) out.u(i, k) = col[i] / sigma[j];
    }
    auto vcol = vcols.row(j);
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = vcol[i];
  }
  return out;
}

}  // namespace

Svd JacobiSvd(const Matrix& a, int max_sweeps) {
  if (!a.AllFinite()) throw NumericalError("JacobiSvd: non-finite input");
  if (a.rows() >= a.cols()) return TallJacobiSvd(a, max_sweeps);
  // a^T = u' s v'^T  =>  a = v' s u'^T
  Svd t = TallJacobiSvd(a.Transpose(), max_sweeps);
  return Svd{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

Matrix PseudoInverse(const Matrix& a, double relative_tolerance) {
  if (!(relative_tolerance > 0.0)) {
    throw InvalidRequestError("PseudoInverse: tolerance must be positive");
  }
  Matrix pinv(a.cols(), a.rows());
  if (a.empty()) return pinv;
  const Svd svd = JacobiSvd(a);
  const double sigma_max = svd.singular_values.empty() ? 0.0 : svd.singular_values[0];
  if (sigma_max == 0.0) return pinv;
  const double cutoff = relative_tolerance * sigma_max;
  const std::size_t k = svd.singular_values.size();
  // pinv = v * diag(1/s) * u^T over the retained singular triplets.
  for (std::size_t t = 0; t < k; ++t) {
    const double s = svd.singular_values[t];
    if (s <= cutoff) break;
    const double inv = 1.0 / s;
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const double vi = svd.v(i, t) * inv;
      if (vi == 0.0) continue;
      auto out_row = pinv.row(i);
      for (std::size_t j = 0; j < a.rows(); ++j) out_row[j] += vi * svd.u(j, t);
    }
  }
  return pinv;
}

}  // namespace nodeunlearn
