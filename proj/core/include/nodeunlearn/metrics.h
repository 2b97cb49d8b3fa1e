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

#ifndef NODEUNLEARN_METRICS_H_
#define NODEUNLEARN_METRICS_H_

#include <chrono>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodeunlearn/graph.h"
#include "nodeunlearn/matrix.h"

namespace nodeunlearn {

// Micro-averaged F1 over `ids`; equal to accuracy for single-label data.
// Throws InvalidRequestError for an empty id set.
double MicroF1(std::span<const int> pred, std::span<const int> truth,
               std::span<const NodeId> ids);

// F1 of argmax(logits) against labels.
double LogitsMicroF1(const Matrix& logits, std::span<const int> truth,
                     std::span<const NodeId> ids);

// Probability that a random positive outscores a random negative (ROC
// AUC), by the Mann-Whitney rank sum with ties worth one half.
double RankAuc(std::span<const double> positive, std::span<const double> negative);

// Membership inference by embedding shift: score(i) = |before_i - after_i|
// for every candidate, positives are `removed`. Throws InvalidRequestError
// when `removed` is empty or covers every candidate.
double MiaAuc(const Matrix& before, const Matrix& after,
              std::span<const NodeId> candidates, std::span<const NodeId> removed);

// Wall-clock seconds spent in `thunk`, on a monotonic clock.
double RecordRuntime(const std::function<void()>& thunk);

// Named runtimes in insertion order.
class RuntimeLog {
 public:
  double Record(std::string label, const std::function<void()>& thunk);
  const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }
  double Get(std::string_view label) const;

 private:
  std::vector<std::pair<std::string, double>> entries_;
};

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_METRICS_H_
