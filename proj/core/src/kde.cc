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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nodeunlearn/checkpoint.h"
#include "nodeunlearn/dataset_io.h"
#include "nodeunlearn/error.h"

namespace nodeunlearn {
namespace {

std::vector<double> Linspace(double lo, double hi, std::size_t size) {
  std::vector<double> out(size);
  const double step = (hi - lo) / static_cast<double>(size - 1);
  for (std::size_t i = 0; i < size; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

double Spacing(const std::vector<double>& axis) {
  return (axis.back() - axis.front()) / static_cast<double>(axis.size() - 1);
}

}  // namespace

std::vector<double> MeanDirection(const Matrix& h) {
  if (h.rows() == 0) throw InvalidRequestError("MeanDirection: no embeddings");
  std::vector<double> mean(h.cols(), 0.0);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const auto row = h.row(r);
    for (std::size_t c = 0; c < mean.size(); ++c) mean[c] += row[c];
  }
  const double norm = Norm2(mean);
  if (norm == 0.0) throw InvalidRequestError("MeanDirection: mean embedding is zero");
  for (double& v : mean) v /= norm;
  return mean;
}

std::vector<PolarPoint> EmbedToPolar(const Matrix& h, std::span<const double> reference) {
  if (reference.size() != h.cols()) {
    throw ShapeError("EmbedToPolar: reference has " + std::to_string(reference.size()) +
                     " entries, embeddings have " + std::to_string(h.cols()));
  }
  const double ref_norm = Norm2(reference);
  if (ref_norm == 0.0) throw InvalidRequestError("EmbedToPolar: zero reference");
  std::vector<PolarPoint> out(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const auto row = h.row(r);
    const double mag = Norm2(row);
    if (mag == 0.0) continue;
    const double cosine = std::clamp(Dot(row, reference) / (mag * ref_norm), -1.0, 1.0);
    out[r] = PolarPoint{mag, std::acos(cosine)};
  }
  return out;
}

KdeAxes BoundingAxes(std::span<const PolarPoint> points, double pad, std::size_t size) {
  if (points.empty()) throw InvalidRequestError("BoundingAxes: no points");
  if (size < 2) throw InvalidRequestError("BoundingAxes: need at least two grid values");
  if (!(pad > 0.0)) throw InvalidRequestError("BoundingAxes: padding must be positive");
  double mag_lo = points[0].mag, mag_hi = points[0].mag;
  double ang_lo = points[0].ang, ang_hi = points[0].ang;
  for (const PolarPoint& p : points) {
    mag_lo = std::min(mag_lo, p.mag);
    mag_hi = std::max(mag_hi, p.mag);
    ang_lo = std::min(ang_lo, p.ang);
    ang_hi = std::max(ang_hi, p.ang);
  }
  return KdeAxes{Linspace(mag_lo - pad, mag_hi + pad, size),
                 Linspace(ang_lo - pad, ang_hi + pad, size)};
}

KdeAxes DefaultAxes(std::span<const PolarPoint> points, double bandwidth, std::size_t size) {
  return BoundingAxes(points, 3.0 * bandwidth, size);
}

double KdeGrid::CellArea() const { return Spacing(mag_axis) * Spacing(ang_axis); }

double KdeGrid::Mass() const {
  double total = 0.0;
  for (double d : density.data()) total += d;
  return total * CellArea();
}

double KdeDensityAt(std::span<const PolarPoint> points, double bandwidth, double mag,
                    double ang) {
  if (points.empty()) throw InvalidRequestError("KdeDensityAt: no points");
  if (!(bandwidth > 0.0)) throw InvalidRequestError("KdeDensityAt: bandwidth must be positive");
  const double inv_two_h2 = 1.0 / (2.0 * bandwidth * bandwidth);
  double sum = 0.0;
  for (const PolarPoint& p : points) {
    const double dm = mag - p.mag;
    const double da = ang - p.ang;
    sum += std::exp(-(dm * dm + da * da) * inv_two_h2);
  }
  const double norm = 2.0 * std::numbers::pi * static_cast<double>(points.size()) *
                      bandwidth * bandwidth;
  return sum / norm;
}

KdeGrid KdePdf(std::span<const PolarPoint> points, double bandwidth, const KdeAxes& axes) {
  if (points.empty()) throw InvalidRequestError("KdePdf: no points");
  if (!(bandwidth > 0.0)) throw InvalidRequestError("KdePdf: bandwidth must be positive");
  if (axes.mag_axis.size() < 2 || axes.ang_axis.size() < 2) {
    throw InvalidRequestError("KdePdf: each axis needs at least two values");
  }
  KdeGrid grid;
  grid.mag_axis = axes.mag_axis;
  grid.ang_axis = axes.ang_axis;
  grid.bandwidth = bandwidth;
  grid.density = Matrix(axes.mag_axis.size(), axes.ang_axis.size());
  // The kernel factorises over the two coordinates, so per-point factors
  // along each axis are computed once.
  const double inv_two_h2 = 1.0 / (2.0 * bandwidth * bandwidth);
  const std::size_t nm = axes.mag_axis.size();
  const std::size_t na = axes.ang_axis.size();
  std::vector<double> fm(nm);
  std::vector<double> fa(na);
  for (const PolarPoint& p : points) {
    for (std::size_t i = 0; i < nm; ++i) {
      const double d = axes.mag_axis[i] - p.mag;
      fm[i] = std::exp(-d * d * inv_two_h2);
    }
    for (std::size_t j = 0; j < na; ++j) {
      const double d = axes.ang_axis[j] - p.ang;
      fa[j] = std::exp(-d * d * inv_two_h2);
    }
    for (std::size_t i = 0; i < nm; ++i) {
      if (fm[i] == 0.0) continue;
      auto row = grid.density.row(i);
      for (std::size_t j = 0; j < na; ++j) row[j] += fm[i] * fa[j];
    }
  }
  const double norm = 2.0 * std::numbers::pi * static_cast<double>(points.size()) *
                      bandwidth * bandwidth;
  grid.density *= 1.0 / norm;
  return grid;
}

double KdeDistance(const KdeGrid& a, const KdeGrid& b) {
  if (a.mag_axis != b.mag_axis || a.ang_axis != b.ang_axis ||
      a.density.rows() != b.density.rows() || a.density.cols() != b.density.cols()) {
    throw ShapeError("KdeDistance: grids differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < a.density.size(); ++i) {
    total += std::abs(a.density.data()[i] - b.density.data()[i]);
  }
  return total * a.CellArea();
}

void WriteKdeCsv(const KdeGrid& grid, const std::filesystem::path& path) {
  std::string text = "mag,ang,density\n";
  for (std::size_t i = 0; i < grid.mag_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.ang_axis.size(); ++j) {
      text += FormatDouble(grid.mag_axis[i]);
      text += ',';
      text += FormatDouble(grid.ang_axis[j]);
      text += ',';
      text += FormatDouble(grid.density(i, j));
      text += '\n';
    }
  }
  WriteTextFile(path, text);
}

}  // namespace nodeunlearn
