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

#ifndef NODEUNLEARN_RANDOM_H_
#define NODEUNLEARN_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <random>

#include "nodeunlearn/matrix.h"

namespace nodeunlearn {

using Rng = std::mt19937_64;

// Independent stream for (seed, purpose) so that e.g. the split and the
// weight initialisation of one seed never share random draws.
inline Rng MakeRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

// Stream tags for MakeRng.
enum RngStream : std::uint64_t {
  kStreamSplit = 1,
  kStreamUnlearnSet = 2,
  kStreamBackboneInit = 3,
  kStreamRectifierInit = 4,
  kStreamSynthetic = 5,
  kStreamPoison = 6,
};

// Uniform(-a, a) with a = sqrt(6 / (fan_in + fan_out)).
inline void GlorotUniform(Matrix& w, std::size_t fan_in, std::size_t fan_out,
                          Rng& rng) {
  const double a = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  std::uniform_real_distribution<double> dist(-a, a);
  for (double& v : w.data()) v = dist(rng);
}

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_RANDOM_H_
