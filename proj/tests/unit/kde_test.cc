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

#include "nodeunlearn/kde.h"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "nodeunlearn/checkpoint.h"
#include "nodeunlearn/error.h"
#include "test_support.h"

namespace nodeunlearn {
namespace {

std::vector<PolarPoint> RandomPoints(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.0, 10.0);
  std::uniform_real_distribution<double> ang(0.0, std::numbers::pi);
  std::vector<PolarPoint> pts(n);
  for (PolarPoint& p : pts) p = PolarPoint{mag(rng), ang(rng)};
  return pts;
}

TEST(KdeTest, KernelPeakAndDecay) {
  const std::vector<PolarPoint> one{{2.0, 1.0}};
  EXPECT_NEAR(KdeDensityAt(one, 1.0, 2.0, 1.0), 1.0 / (2.0 * std::numbers::pi), 1e-15);
  EXPECT_NEAR(KdeDensityAt(one, 1.0, 2.0, 1.0), 0.15915, 1e-5);
  EXPECT_LT(KdeDensityAt(one, 1.0, 12.0, 1.0), 1e-20);
  EXPECT_LT(KdeDensityAt(one, 0.5, 2.0, 6.0), 1e-20);
}

TEST(KdeTest, MatchesNumpyOracle) {
  const auto& fx = testing::Fixtures().at("kde");
  std::vector<PolarPoint> pts;
  for (const auto& p : fx.at("points")) pts.push_back(PolarPoint{p[0], p[1]});
  const double h = fx.at("bandwidth").get<double>();
  const auto& queries = fx.at("queries");
  const auto expected = fx.at("density").get<std::vector<double>>();
  for (std::size_t q = 0; q < expected.size(); ++q) {
    EXPECT_NEAR(KdeDensityAt(pts, h, queries[q][0], queries[q][1]), expected[q],
                1e-15 + 1e-12 * expected[q]);
  }
}

TEST(KdeTest, SymmetricAboutMidpoint) {
  const std::vector<PolarPoint> pair{{1.0, 0.5}, {3.0, 1.5}};
  for (double d : {0.1, 0.7, 1.3, 2.9}) {
    for (double e : {-0.4, 0.0, 0.8}) {
      EXPECT_NEAR(KdeDensityAt(pair, 0.8, 2.0 + d, 1.0 + e),
                  KdeDensityAt(pair, 0.8, 2.0 - d, 1.0 - e), 1e-12);
    }
  }
}

TEST(KdeTest, GridAgreesWithPointwiseDensity) {
  std::mt19937_64 rng(1);
  const auto pts = RandomPoints(30, rng);
  const KdeGrid grid = KdePdf(pts, 1.0, DefaultAxes(pts, 1.0, 40));
  for (std::size_t a = 0; a < 40; a += 7) {
    for (std::size_t b = 0; b < 40; b += 5) {
      EXPECT_NEAR(grid.density(a, b),
                  KdeDensityAt(pts, 1.0, grid.mag_axis[a], grid.ang_axis[b]), 1e-14);
    }
  }
}

TEST(KdeTest, PaddedGridHoldsAlmostAllMass) {
  std::mt19937_64 rng(2);
  for (std::size_t n : {1u, 10u, 200u, 1000u}) {
    for (double h : {0.3, 1.0, 2.0}) {
      const auto pts = RandomPoints(n, rng);
      const KdeGrid grid = KdePdf(pts, h, DefaultAxes(pts, h));
      EXPECT_GE(grid.Mass(), 0.9) << n << " " << h;
      EXPECT_LE(grid.Mass(), 1.0) << n << " " << h;
      for (double v : grid.density.data()) EXPECT_GE(v, 0.0);
    }
  }
}

TEST(KdeTest, DistanceProperties) {
  std::mt19937_64 rng(3);
  const auto a = RandomPoints(50, rng);
  const auto b = RandomPoints(50, rng);
  std::vector<PolarPoint> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const KdeAxes axes = DefaultAxes(both, 1.0);
  const KdeGrid ga = KdePdf(a, 1.0, axes);
  const KdeGrid gb = KdePdf(b, 1.0, axes);
  EXPECT_EQ(KdeDistance(ga, ga), 0.0);
  EXPECT_GT(KdeDistance(ga, gb), 0.0);
  EXPECT_EQ(KdeDistance(ga, gb), KdeDistance(gb, ga));
  EXPECT_LE(KdeDistance(ga, gb), 2.0);
  const KdeGrid other = KdePdf(a, 1.0, DefaultAxes(a, 1.0, 50));
  EXPECT_THROW(KdeDistance(ga, other), ShapeError);
}

TEST(EmbedToPolarTest, MagnitudeAndAngle) {
  const Matrix h = Matrix::FromRows({{3, 4, 0}, {2, 0, 0}, {0, 5, 0}, {0, 0, 0}});
  const std::vector<double> u{1, 0, 0};
  const auto p = EmbedToPolar(h, u);
  EXPECT_DOUBLE_EQ(p[0].mag, 5.0);
  EXPECT_NEAR(p[1].ang, 0.0, 1e-15);
  EXPECT_NEAR(p[2].ang, std::numbers::pi / 2, 1e-15);
  EXPECT_EQ(p[3].mag, 0.0);
  EXPECT_EQ(p[3].ang, 0.0);
  EXPECT_THROW(EmbedToPolar(h, std::vector<double>(3, 0.0)), InvalidRequestError);
  EXPECT_THROW(EmbedToPolar(h, std::vector<double>(2, 1.0)), ShapeError);
  const auto mean = MeanDirection(Matrix::FromRows({{1, 1}, {1, -1}}));
  EXPECT_NEAR(mean[0], 1.0, 1e-15);
  EXPECT_NEAR(mean[1], 0.0, 1e-15);
}

TEST(KdeCsvTest, WritesOneRowPerCell) {
  const std::vector<PolarPoint> pts{{1.0, 1.0}};
  const KdeGrid grid = KdePdf(pts, 1.0, DefaultAxes(pts, 1.0, 3));
  testing::TempDir dir;
  WriteKdeCsv(grid, dir.path() / "k.csv");
  const std::string text = ReadTextFile(dir.path() / "k.csv");
  EXPECT_EQ(text.rfind("mag,ang,density\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
}

}  // namespace
}  // namespace nodeunlearn
