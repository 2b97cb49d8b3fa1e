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

#include "nodeunlearn/synthetic.h"

#include <random>
#include <string>

#include "nodeunlearn/error.h"
#include "nodeunlearn/random.h"

namespace nodeunlearn {

Dataset GenerateSbm(const SbmOptions& options) {
  if (options.blocks < 1 || options.per_block < 1 || options.feature_dim < 1) {
    throw InvalidRequestError("GenerateSbm: blocks, per_block and feature_dim must be >= 1");
  }
  if (options.blocks * options.per_block < 2) {
    throw InvalidRequestError("GenerateSbm: need at least two nodes");
  }
  if (!(options.p_out >= 0.0 && options.p_out < options.p_in && options.p_in <= 1.0)) {
    throw InvalidRequestError("GenerateSbm: require 0 <= p_out < p_in <= 1");
  }
  if (!(options.noise_std >= 0.0)) {
    throw InvalidRequestError("GenerateSbm: noise_std must be >= 0");
  }

  const std::size_t n = options.blocks * options.per_block;
  Rng rng = MakeRng(options.seed, kStreamSynthetic);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<int>(i / options.per_block);
  }

  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double p = labels[u] == labels[v] ? options.p_in : options.p_out;
      // Always draw so the stream position does not depend on p.
      const double draw = coin(rng);
      if (draw < p) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
  }

  Matrix features(n, options.feature_dim);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = features.row(i);
    for (double& x : row) x = options.noise_std * noise(rng);
    row[static_cast<std::size_t>(labels[i]) % options.feature_dim] += options.signal;
  }

  Graph graph(std::move(features), std::move(labels), options.blocks,
              std::move(edges),
              "sbm-" + std::to_string(options.blocks) + "x" +
                  std::to_string(options.per_block));
  SplitSpec split = SplitTrainTest(graph, options.train_frac, options.seed);
  return Dataset{std::move(graph), std::move(split)};
}

}  // namespace nodeunlearn
