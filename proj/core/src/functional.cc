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

#include <algorithm>
#include <cmath>
#include <string>

#include "nodeunlearn/error.h"

namespace nodeunlearn {
namespace {

void RequireSameLength(std::span<const double> p, std::span<const double> q,
                       const char* op) {
  if (p.size() != q.size()) {
    throw ShapeError(std::string(op) + ": lengths " + std::to_string(p.size()) +
                     " and " + std::to_string(q.size()));
  }
}

double LogSumExp(std::span<const double> v) {
  const double shift = *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += std::exp(x - shift);
  return shift + std::log(s);
}

}  // namespace

std::vector<double> SoftmaxNorm(std::span<const double> logits) {
  std::vector<double> out(logits.size());
  if (logits.empty()) return out;
  const double shift = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - shift);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

double KlDivergence(std::span<const double> p, std::span<const double> q) {
  RequireSameLength(p, q, "KlDivergence");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    kl += p[i] * std::log(p[i] / std::max(q[i], kProbabilityFloor));
  }
  return kl;
}

std::vector<double> KlDivergenceLogitGrad(std::span<const double> p,
                                          std::span<const double> q) {
  RequireSameLength(p, q, "KlDivergenceLogitGrad");
  // dKL/dq_i = -p_i / q_i where the floor is inactive, then through the
  // softmax Jacobian: dz = q * (g - <g, q>).
  std::vector<double> g(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0.0 && q[i] > kProbabilityFloor) g[i] = -p[i] / q[i];
  }
  double inner = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) inner += g[i] * q[i];
  for (std::size_t i = 0; i < p.size(); ++i) g[i] = q[i] * (g[i] - inner);
  return g;
}

double CrossEntropy(std::span<const double> logits, std::size_t label) {
  if (label >= logits.size()) {
    throw IndexError("CrossEntropy: label " + std::to_string(label) +
                     " out of range for " + std::to_string(logits.size()) +
                     " classes");
  }
  return LogSumExp(logits) - logits[label];
}

std::vector<double> CrossEntropyGrad(std::span<const double> logits,
                                     std::size_t label) {
  if (label >= logits.size()) {
    throw IndexError("CrossEntropyGrad: label " + std::to_string(label) +
                     " out of range for " + std::to_string(logits.size()) +
                     " classes");
  }
  std::vector<double> g = SoftmaxNorm(logits);
  g[label] -= 1.0;
  return g;
}

}  // namespace nodeunlearn
