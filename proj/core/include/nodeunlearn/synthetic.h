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

#ifndef NODEUNLEARN_SYNTHETIC_H_
#define NODEUNLEARN_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>

#include "nodeunlearn/dataset_io.h"

namespace nodeunlearn {

struct SbmOptions {
  std::size_t blocks = 5;
  std::size_t per_block = 100;
  double p_in = 0.1;
  double p_out = 0.005;
  std::size_t feature_dim = 32;
  // Standard deviation of the Gaussian noise added to the block signal.
  double noise_std = 1.0;
  // Magnitude of the block indicator written into feature (block mod d).
  double signal = 1.0;
  double train_frac = 0.9;
  std::uint64_t seed = 0;
};

// Stochastic block model. Node k belongs to block k / per_block and carries
// that block as its label. Every pair is an edge independently with
// probability p_in (same block) or p_out. Features are
// signal * onehot(block mod d) + N(0, noise_std^2). The split uses
// SplitTrainTest(train_frac, seed).
Dataset GenerateSbm(const SbmOptions& options);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_SYNTHETIC_H_
