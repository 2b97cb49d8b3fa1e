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

#ifndef NODEUNLEARN_KDE_H_
#define NODEUNLEARN_KDE_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "nodeunlearn/matrix.h"

namespace nodeunlearn {

struct PolarPoint {
  double mag = 0.0;
  double ang = 0.0;
};

// Normalised mean row of h. Throws InvalidRequestError if the mean is zero.
std::vector<double> MeanDirection(const Matrix& h);

// mag = |h_i|, ang = angle between h_i and `reference` in [0, pi]. Zero rows
// map to (0, 0). Throws InvalidRequestError for a zero reference.
std::vector<PolarPoint> EmbedToPolar(const Matrix& h, std::span<const double> reference);

struct KdeAxes {
  std::vector<double> mag_axis;
  std::vector<double> ang_axis;
};

// `size` evenly spaced values per axis spanning the bounding box of
// `points` widened by `pad` on every side.
KdeAxes BoundingAxes(std::span<const PolarPoint> points, double pad, std::size_t size = 100);

// Default axes for a bandwidth: padding of three bandwidths.
KdeAxes DefaultAxes(std::span<const PolarPoint> points, double bandwidth,
                    std::size_t size = 100);

struct KdeGrid {
  std::vector<double> mag_axis;
  std::vector<double> ang_axis;
  Matrix density;  // mag_axis.size() x ang_axis.size()
  double bandwidth = 1.0;

  double CellArea() const;
  // Riemann sum of the density over the grid.
  double Mass() const;
};

// Gaussian product-kernel density at one location.
double KdeDensityAt(std::span<const PolarPoint> points, double bandwidth, double mag,
                    double ang);

// Density on every grid node. Throws InvalidRequestError for no points, a
// non-positive bandwidth or an axis with fewer than two values.
KdeGrid KdePdf(std::span<const PolarPoint> points, double bandwidth, const KdeAxes& axes);

// L1 distance between densities scaled by the cell area. Throws ShapeError
// unless both grids share axes.
double KdeDistance(const KdeGrid& a, const KdeGrid& b);

// Rows of "mag,ang,density".
void WriteKdeCsv(const KdeGrid& grid, const std::filesystem::path& path);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_KDE_H_
