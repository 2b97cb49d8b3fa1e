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

#include "nodeunlearn/rectifier.h"

#include <random>

#include <gtest/gtest.h>

#include "nodeunlearn/error.h"
#include "nodeunlearn/random.h"
#include "test_support.h"

namespace nodeunlearn {
namespace {

using testing::RandomMatrix;

std::vector<double> RandomVector(std::size_t n, std::mt19937_64& rng) {
  const Matrix m = RandomMatrix(n, 1, rng);
  return m.values();
}

double Distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

TEST(RangeNullCorrectTest, FullRowRankConsistencyAndNullPreservation) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const DegenerateOperator op(RandomMatrix(7, 16, rng));
    const Matrix null = op.NullProjector();
    const auto f1 = RandomVector(7, rng);
    const auto f2 = RandomVector(16, rng);
    const auto out = RangeNullCorrect(op, f1, f2);
    EXPECT_LE(Distance(MatVec(op.h(), out), f1), 1e-8 * Norm2(f1));
    EXPECT_LE(Distance(MatVec(null, out), MatVec(null, f2)), 1e-8 * Norm2(f2));
  }
}

TEST(RangeNullCorrectTest, RankDeficientHitsRangeProjection) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const DegenerateOperator op(MatMul(RandomMatrix(7, 3, rng), RandomMatrix(3, 16, rng)));
    const auto f1 = RandomVector(7, rng);
    const auto f2 = RandomVector(16, rng);
    const auto out = RangeNullCorrect(op, f1, f2);
    const auto projected = MatVec(op.h(), MatVec(op.h_pinv(), f1));
    EXPECT_LE(Distance(MatVec(op.h(), out), projected), 1e-8 * Norm2(f1));
  }
}

TEST(RangeNullCorrectTest, SquareInvertibleAndFixedPoint) {
  const DegenerateOperator square(Matrix::FromRows({{2, 1}, {1, 3}}));
  const std::vector<double> f1{1, 2};
  const std::vector<double> junk{100, -100};
  const auto out = RangeNullCorrect(square, f1, junk);
  // inverse of [[2,1],[1,3]] is [[3,-1],[-1,2]] / 5
  EXPECT_NEAR(out[0], 0.2, 1e-12);
  EXPECT_NEAR(out[1], 0.6, 1e-12);

  std::mt19937_64 rng(3);
  const DegenerateOperator op(RandomMatrix(3, 5, rng));
  const auto g = RandomVector(3, rng);
  const auto start = MatVec(op.h_pinv(), g);
  const auto fixed = RangeNullCorrect(op, g, start);
  EXPECT_LT(Distance(fixed, start), 1e-12);

  EXPECT_THROW(RangeNullCorrect(op, start, start), ShapeError);
}

TEST(GammaFactorTest, ClosedForms) {
  // path 0-1-2-3: degrees 1,2,2,1
  const Graph path = testing::PathGraph(4);
  const std::vector<NodeId> twos{1, 2};
  const std::vector<NodeId> mixed{0, 1};
  EXPECT_DOUBLE_EQ(GammaFactor(path, twos), 1.5);
  const Graph star(Matrix(4, 1), {0, 0, 0, 0}, 1, {{0, 1}, {0, 2}, {0, 3}});
  const std::vector<NodeId> one_three{0, 1};
  EXPECT_DOUBLE_EQ(GammaFactor(star, one_three), 1.5);
  EXPECT_DOUBLE_EQ(GammaFactor(path, mixed), 1.0 + 1.0 / 1.5);
  const Graph isolated(Matrix(2, 1), {0, 0}, 1, {});
  const std::vector<NodeId> both{0, 1};
  EXPECT_DOUBLE_EQ(GammaFactor(isolated, both), 1.0);
  EXPECT_THROW(GammaFactor(path, {}), InvalidRequestError);
}

TEST(CombineLossesTest, WeightedSum) {
  EXPECT_NEAR(CombineLosses(0.1, -2.0, 1.0, 3.0), 2.6, 1e-15);
  // with plus + inter below local, a larger beta moves weight off the local term
  double previous = CombineLosses(0.0, -2.0, 1.0, 3.0);
  for (double beta = 0.05; beta < 1.0; beta += 0.05) {
    const double now = CombineLosses(beta, -2.0, 1.0, 3.0);
    EXPECT_LT(now, previous);
    previous = now;
  }
}

class RectifierTest : public ::testing::Test {
 protected:
  RectifierTest() {
    std::mt19937_64 rng(4);
    op_ = DegenerateOperator(RandomMatrix(7, 16, rng));
  }
  DegenerateOperator op_;
};

TEST_F(RectifierTest, InitializationShapesAndZeroInteraction) {
  const Rectifier r = Rectifier::Initialize(op_, 1.5, 0.1, RectifierConfig{});
  EXPECT_EQ(r.interaction().input_dim(), 32u);
  EXPECT_EQ(r.interaction().output_dim(), 7u);
  EXPECT_EQ(r.reconstruction().input_dim(), 7u);
  EXPECT_EQ(r.reconstruction().output_dim(), 16u);
  std::mt19937_64 rng(5);
  const auto a = RandomVector(16, rng);
  const auto b = RandomVector(16, rng);
  EXPECT_EQ(r.Interact(a, b), std::vector<double>(7, 0.0));
  EXPECT_THROW(r.Interact(a, std::vector<double>(3)), ShapeError);
  EXPECT_THROW(r.Reconstruct(a), ShapeError);
  for (double v : r.Reconstruct(RandomVector(7, rng))) EXPECT_TRUE(std::isfinite(v));
}

TEST_F(RectifierTest, InteractionIsOrderSensitive) {
  RectifierConfig config;
  Rectifier r = Rectifier::Initialize(op_, 1.5, 0.1, config);
  Rng rng = MakeRng(6, 0);
  GlorotUniform(r.mutable_interaction().mutable_layers().back().weight, 64, 7, rng);
  std::mt19937_64 data(7);
  const auto a = RandomVector(16, data);
  const auto b = RandomVector(16, data);
  EXPECT_GT(Distance(r.Interact(a, b), r.Interact(b, a)), 1e-6);
}

TEST_F(RectifierTest, ZeroReconstructionAndAblationSwitch) {
  RectifierConfig config;
  Rectifier r = Rectifier::Initialize(op_, 1.5, 0.1, config);
  for (DenseLayer& l : r.mutable_reconstruction().mutable_layers()) l.weight.Fill(0.0);
  std::mt19937_64 rng(8);
  const auto f1 = RandomVector(7, rng);
  EXPECT_EQ(r.Reconstruct(f1), std::vector<double>(16, 0.0));
  const auto corrected = r.CorrectedReconstruction(f1);
  EXPECT_LT(Distance(corrected, MatVec(op_.h_pinv(), f1)), 1e-12);

  config.use_range_null = false;
  const Rectifier raw(r.interaction(), r.reconstruction(), op_, 1.5, 0.1, config);
  EXPECT_EQ(raw.CorrectedReconstruction(f1), std::vector<double>(16, 0.0));
}

TEST_F(RectifierTest, ConstructorValidation) {
  const Rectifier r = Rectifier::Initialize(op_, 1.5, 0.1, RectifierConfig{});
  EXPECT_THROW(Rectifier(r.reconstruction(), r.reconstruction(), op_, 1.5, 0.1, {}),
               ShapeError);
  EXPECT_THROW(Rectifier(r.interaction(), r.reconstruction(), op_, 0.5, 0.1, {}),
               InvalidRequestError);
  EXPECT_THROW(Rectifier(r.interaction(), r.reconstruction(), op_, 1.5, 1.0, {}),
               InvalidRequestError);
  RectifierConfig bad;
  bad.local_top_frac = 0.0;
  EXPECT_THROW(ValidateRectifierConfig(bad), InvalidRequestError);
  bad = RectifierConfig{};
  bad.hop_radius = 0;
  EXPECT_THROW(ValidateRectifierConfig(bad), InvalidRequestError);
  bad.hop_radius = kUnboundedHops;
  EXPECT_NO_THROW(ValidateRectifierConfig(bad));
}

TEST_F(RectifierTest, SeededInitializationIsDeterministic) {
  RectifierConfig config;
  config.seed = 11;
  const Rectifier a = Rectifier::Initialize(op_, 1.5, 0.1, config);
  const Rectifier b = Rectifier::Initialize(op_, 1.5, 0.1, config);
  EXPECT_EQ(a.reconstruction().layers()[0].weight, b.reconstruction().layers()[0].weight);
  EXPECT_EQ(a.interaction().layers()[0].weight, b.interaction().layers()[0].weight);
}

}  // namespace
}  // namespace nodeunlearn
