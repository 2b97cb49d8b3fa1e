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

#include "nodeunlearn/optimizer.h"

#include <cmath>
#include <string>

#include "nodeunlearn/error.h"

namespace nodeunlearn {

AdamOptimizer::AdamOptimizer(AdamOptions options) : options_(options) {}

void AdamOptimizer::Step(std::span<const std::span<double>> params,
                         std::span<const std::span<const double>> grads) {
  if (params.size() != grads.size()) {
    throw ShapeError("AdamOptimizer::Step: " + std::to_string(params.size()) +
                     " parameter blocks but " + std::to_string(grads.size()) +
                     " gradient blocks");
  }
  if (first_moment_.empty()) {
    for (const auto& p : params) {
      first_moment_.emplace_back(p.size(), 0.0);
      second_moment_.emplace_back(p.size(), 0.0);
    }
  }
  if (first_moment_.size() != params.size()) {
    throw ShapeError("AdamOptimizer::Step: parameter layout changed");
  }
  for (std::size_t b = 0; b < params.size(); ++b) {
    if (params[b].size() != grads[b].size() ||
        params[b].size() != first_moment_[b].size()) {
      throw ShapeError("AdamOptimizer::Step: block " + std::to_string(b) +
                       " size mismatch");
    }
  }

  ++step_;
  const double b1 = options_.beta1;
  const double b2 = options_.beta2;
  const double correction1 = 1.0 - std::pow(b1, static_cast<double>(step_));
  const double correction2 = 1.0 - std::pow(b2, static_cast<double>(step_));
  const double step_size = options_.learning_rate / correction1;
  const double sqrt_correction2 = std::sqrt(correction2);

  for (std::size_t b = 0; b < params.size(); ++b) {
    std::span<double> p = params[b];
    std::span<const double> g = grads[b];
    std::vector<double>& m = first_moment_[b];
    std::vector<double>& v = second_moment_[b];
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double gi = g[i] + options_.weight_decay * p[i];
      m[i] = b1 * m[i] + (1.0 - b1) * gi;
      v[i] = b2 * v[i] + (1.0 - b2) * gi * gi;
      const double denom = std::sqrt(v[i]) / sqrt_correction2 + options_.epsilon;
      p[i] -= step_size * m[i] / denom;
    }
  }
}

}  // namespace nodeunlearn
