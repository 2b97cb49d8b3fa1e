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

#include "nodeunlearn/functional.h"

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "nodeunlearn/error.h"
#include "test_support.h"

namespace nodeunlearn {
namespace {

using testing::Fixtures;

TEST(SoftmaxTest, MatchesFixtures) {
  for (const auto& c : Fixtures().at("softmax")) {
    const auto logits = c.at("logits").get<std::vector<double>>();
    const auto probs = c.at("probs").get<std::vector<double>>();
    const std::vector<double> got = SoftmaxNorm(logits);
    ASSERT_EQ(got.size(), probs.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], probs[i], 1e-15);
  }
}

TEST(SoftmaxTest, LargeLogitsStayFinite) {
  const std::vector<double> logits{1000.0, 1000.0, 1000.0};
  for (double p : SoftmaxNorm(logits)) EXPECT_NEAR(p, 1.0 / 3.0, 1e-15);
  const std::vector<double> spread{-1e308, 0.0, 700.0};
  const auto p = SoftmaxNorm(spread);
  EXPECT_DOUBLE_EQ(std::accumulate(p.begin(), p.end(), 0.0), 1.0);
}

TEST(KlDivergenceTest, MatchesFixtures) {
  for (const auto& c : Fixtures().at("kl")) {
    const auto p = c.at("p").get<std::vector<double>>();
    const auto q = c.at("q").get<std::vector<double>>();
    EXPECT_NEAR(KlDivergence(p, q), c.at("value").get<double>(), 1e-14);
  }
  const std::vector<double> p{0.5, 0.5}, q{0.25, 0.75};
  EXPECT_NEAR(KlDivergence(p, q), 0.14384, 1e-5);
}

TEST(KlDivergenceTest, NonNegativeAndZeroOnEqualInputs) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> z(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(5), b(5);
    for (double& v : a) v = z(rng);
    for (double& v : b) v = z(rng);
    const auto p = SoftmaxNorm(a);
    const auto q = SoftmaxNorm(b);
    EXPECT_GE(KlDivergence(p, q), 0.0);
    EXPECT_EQ(KlDivergence(p, p), 0.0);
  }
}

TEST(KlDivergenceTest, LengthMismatchThrows) {
  const std::vector<double> p{1.0}, q{0.5, 0.5};
  EXPECT_THROW(KlDivergence(p, q), ShapeError);
}

TEST(KlDivergenceTest, LogitGradientMatchesFiniteDifference) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> z(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(4), logits(4);
    for (double& v : a) v = z(rng);
    for (double& v : logits) v = z(rng);
    const auto p = SoftmaxNorm(a);
    const auto grad = KlDivergenceLogitGrad(p, SoftmaxNorm(logits));
    for (std::size_t i = 0; i < logits.size(); ++i) {
      auto up = logits, down = logits;
      up[i] += 1e-6;
      down[i] -= 1e-6;
      const double fd =
          (KlDivergence(p, SoftmaxNorm(up)) - KlDivergence(p, SoftmaxNorm(down))) / 2e-6;
      EXPECT_NEAR(grad[i], fd, 1e-7);
    }
  }
}

TEST(CrossEntropyTest, MatchesFixtures) {
  for (const auto& c : Fixtures().at("cross_entropy")) {
    const auto logits = c.at("logits").get<std::vector<double>>();
    EXPECT_NEAR(CrossEntropy(logits, c.at("label").get<std::size_t>()),
                c.at("value").get<double>(), 1e-14);
  }
  const std::vector<double> even{0.0, 0.0};
  EXPECT_NEAR(CrossEntropy(even, 0), std::log(2.0), 1e-15);
  const std::vector<double> sure{10.0, -10.0};
  EXPECT_NEAR(CrossEntropy(sure, 0), 0.0, 1e-8);
}

TEST(CrossEntropyTest, GradientIsSoftmaxMinusOneHot) {
  const std::vector<double> logits{1.0, 2.0, 3.0};
  const auto g = CrossEntropyGrad(logits, 2);
  const auto p = SoftmaxNorm(logits);
  EXPECT_DOUBLE_EQ(g[0], p[0]);
  EXPECT_DOUBLE_EQ(g[2], p[2] - 1.0);
  EXPECT_THROW(CrossEntropy(logits, 3), IndexError);
}

}  // namespace
}  // namespace nodeunlearn
