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
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "test_support.h"

namespace nodeunlearn {
namespace {

using testing::Fixtures;
using testing::MatrixFromJson;
using testing::PinvCase;
using testing::RandomMatrix;

double RelativeGap(const Matrix& lhs, const Matrix& rhs) {
  const double scale = std::max({FrobeniusNorm(lhs), FrobeniusNorm(rhs), 1.0});
  return FrobeniusNorm(lhs - rhs) / scale;
}

TEST(PseudoInverseTest, MoorePenroseIdentitiesOnGeneratedMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = PinvCase(trial, rng);
    const Matrix p = PseudoInverse(a);
    ASSERT_EQ(p.rows(), a.cols());
    ASSERT_EQ(p.cols(), a.rows());
    const Matrix ap = MatMul(a, p);
    const Matrix pa = MatMul(p, a);
    EXPECT_LT(RelativeGap(MatMul(ap, a), a), 1e-8) << "trial " << trial;
    EXPECT_LT(RelativeGap(MatMul(pa, p), p), 1e-8) << "trial " << trial;
    EXPECT_LT(RelativeGap(ap.Transpose(), ap), 1e-8) << "trial " << trial;
    EXPECT_LT(RelativeGap(pa.Transpose(), pa), 1e-8) << "trial " << trial;
  }
}

TEST(PseudoInverseTest, AgreesWithEigenSvd) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = PinvCase(trial, rng);
    Eigen::MatrixXd e(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) e(r, c) = a(r, c);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(kDefaultPinvTolerance);
    const Eigen::MatrixXd ep =
        svd.solve(Eigen::MatrixXd::Identity(a.rows(), a.rows()));
    Matrix expected(a.cols(), a.rows());
    for (std::size_t r = 0; r < expected.rows(); ++r) {
      for (std::size_t c = 0; c < expected.cols(); ++c) expected(r, c) = ep(r, c);
    }
    EXPECT_LT(RelativeGap(PseudoInverse(a), expected), 1e-8) << "trial " << trial;
  }
}

TEST(PseudoInverseTest, MatchesNumpyFixtures) {
  for (const auto& c : Fixtures().at("pinv")) {
    const Matrix a = MatrixFromJson(c.at("a"));
    const Matrix expected = MatrixFromJson(c.at("pinv"));
    EXPECT_LT(RelativeGap(PseudoInverse(a), expected), 1e-9)
        << a.rows() << "x" << a.cols();
  }
}

TEST(PseudoInverseTest, ClosedFormCases) {
  EXPECT_LT(MaxAbsDiff(PseudoInverse(Matrix::Identity(2)), Matrix::Identity(2)), 1e-15);
  const Matrix rank_one = Matrix::FromRows({{1, 2}, {2, 4}});
  EXPECT_LT(MaxAbsDiff(PseudoInverse(rank_one), rank_one * (1.0 / 25.0)), 1e-14);
  EXPECT_NEAR(PseudoInverse(rank_one)(0, 0), 0.04, 1e-14);
  EXPECT_EQ(PseudoInverse(Matrix(3, 2)), Matrix(2, 3));
}

TEST(PseudoInverseTest, OrthonormalRowsGiveTranspose) {
  const double s = 1.0 / std::sqrt(2.0);
  const Matrix h = Matrix::FromRows({{s, s, 0}, {-s, s, 0}});
  EXPECT_LT(MaxAbsDiff(PseudoInverse(h), h.Transpose()), 1e-14);
}

TEST(JacobiSvdTest, ReconstructsInput) {
  std::mt19937_64 rng(13);
  const Matrix a = RandomMatrix(6, 4, rng);
  const Svd svd = JacobiSvd(a);
  Matrix us = svd.u;
  for (std::size_t r = 0; r < us.rows(); ++r) {
    for (std::size_t c = 0; c < us.cols(); ++c) us(r, c) *= svd.singular_values[c];
  }
  EXPECT_LT(MaxAbsDiff(MatMulTransB(us, svd.v), a), 1e-12);
  EXPECT_TRUE(std::is_sorted(svd.singular_values.rbegin(), svd.singular_values.rend()));
}

}  // namespace
}  // namespace nodeunlearn
