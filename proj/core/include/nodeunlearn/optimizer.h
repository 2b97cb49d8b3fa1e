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

#ifndef NODEUNLEARN_OPTIMIZER_H_
#define NODEUNLEARN_OPTIMIZER_H_

#include <cstdint>
#include <span>
#include <vector>

namespace nodeunlearn {

struct AdamOptions {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  // L2 penalty folded into the gradient (coupled weight decay).
  double weight_decay = 0.0;
};

// Adam with bias correction. Moment buffers are sized on the first Step and
// must keep the same parameter layout afterwards.
class AdamOptimizer {
 public:
  explicit AdamOptimizer(AdamOptions options = {});

  void Step(std::span<const std::span<double>> params,
            std::span<const std::span<const double>> grads);

  std::int64_t step_count() const { return step_; }
  const AdamOptions& options() const { return options_; }
  void set_learning_rate(double lr) { options_.learning_rate = lr; }

 private:
  AdamOptions options_;
  std::int64_t step_ = 0;
  std::vector<std::vector<double>> first_moment_;
  std::vector<std::vector<double>> second_moment_;
};

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_OPTIMIZER_H_
