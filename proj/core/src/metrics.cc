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

#include "nodeunlearn/metrics.h"

#include <algorithm>

#include "nodeunlearn/error.h"

namespace nodeunlearn {

double MicroF1(std::span<const int> pred, std::span<const int> truth,
               std::span<const NodeId> ids) {
  if (ids.empty()) throw InvalidRequestError("MicroF1: empty id set");
  if (pred.size() != truth.size()) {
    throw ShapeError("MicroF1: prediction and label counts differ");
  }
  std::size_t correct = 0;
  for (NodeId id : ids) {
    if (id >= pred.size()) {
      throw IndexError("MicroF1: node " + std::to_string(id) + " out of range");
    }
    if (pred[id] == truth[id]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(ids.size());
}

double LogitsMicroF1(const Matrix& logits, std::span<const int> truth,
                     std::span<const NodeId> ids) {
  if (logits.rows() != truth.size()) {
    throw ShapeError("LogitsMicroF1: logits rows do not match labels");
  }
  std::vector<int> pred(logits.rows());
  for (std::size_t r = 0; r < logits.rows(); ++r) {
    pred[r] = static_cast<int>(ArgMax(logits.row(r)));
  }
  return MicroF1(pred, truth, ids);
}

double RankAuc(std::span<const double> positive, std::span<const double> negative) {
  if (positive.empty() || negative.empty()) {
    throw InvalidRequestError("RankAuc: need at least one positive and one negative");
  }
  struct Scored {
    double score;
    bool positive;
  };
  std::vector<Scored> all;
  all.reserve(positive.size() + negative.size());
  for (double s : positive) all.push_back({s, true});
  for (double s : negative) all.push_back({s, false});
  std::sort(all.begin(), all.end(),
            [](const Scored& a, const Scored& b) { return a.score < b.score; });
  // Tie groups share their average 1-based rank.
  double pos_rank_sum = 0.0;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j + 1 < all.size() && all[j + 1].score == all[i].score) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      if (all[k].positive) pos_rank_sum += rank;
    }
    i = j + 1;
  }
  const auto np = static_cast<double>(positive.size());
  const double u = pos_rank_sum - np * (np + 1.0) / 2.0;
  return u / (np * static_cast<double>(negative.size()));
}

double MiaAuc(const Matrix& before, const Matrix& after,
              std::span<const NodeId> candidates, std::span<const NodeId> removed) {
  if (before.rows() != after.rows() || before.cols() != after.cols()) {
    throw ShapeError("MiaAuc: embedding matrices differ in shape");
  }
  if (removed.empty()) throw InvalidRequestError("MiaAuc: empty unlearned set");
  std::vector<NodeId> members(removed.begin(), removed.end());
  std::sort(members.begin(), members.end());
  std::vector<double> pos;
  std::vector<double> neg;
  std::vector<double> diff(before.cols());
  for (NodeId id : candidates) {
    if (id >= before.rows()) {
      throw IndexError("MiaAuc: node " + std::to_string(id) + " out of range");
    }
    const auto a = before.row(id);
    const auto b = after.row(id);
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = a[k] - b[k];
    const bool member = std::binary_search(members.begin(), members.end(), id);
    (member ? pos : neg).push_back(Norm2(diff));
  }
  if (pos.size() != members.size()) {
    throw InvalidRequestError("MiaAuc: unlearned nodes must be candidates");
  }
  if (neg.empty()) throw InvalidRequestError("MiaAuc: unlearned set covers every candidate");
  return RankAuc(pos, neg);
}

double RecordRuntime(const std::function<void()>& thunk) {
  const auto start = std::chrono::steady_clock::now();
  thunk();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double RuntimeLog::Record(std::string label, const std::function<void()>& thunk) {
  const double seconds = RecordRuntime(thunk);
  entries_.emplace_back(std::move(label), seconds);
  return seconds;
}

double RuntimeLog::Get(std::string_view label) const {
  for (const auto& [name, seconds] : entries_) {
    if (name == label) return seconds;
  }
  throw InvalidRequestError("RuntimeLog: no entry '" + std::string(label) + "'");
}

}  // namespace nodeunlearn
