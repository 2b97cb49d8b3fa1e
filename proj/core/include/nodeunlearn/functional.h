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

#ifndef NODEUNLEARN_FUNCTIONAL_H_
#define NODEUNLEARN_FUNCTIONAL_H_

#include <cstddef>
#include <span>
#include <vector>

namespace nodeunlearn {

// Probabilities below this floor are clamped before taking logarithms.
inline constexpr double kProbabilityFloor = 1e-12;

// Max-shifted softmax.
std::vector<double> SoftmaxNorm(std::span<const double> logits);

// sum_i p_i * ln(p_i / max(q_i, floor)); terms with p_i == 0 vanish.
double KlDivergence(std::span<const double> p, std::span<const double> q);

// d KL(p || softmax(z)) / dz for q = softmax(z), exact for the floored form
// used by KlDivergence.
std::vector<double> KlDivergenceLogitGrad(std::span<const double> p,
                                          std::span<const double> q);

// -ln softmax(logits)[label]
double CrossEntropy(std::span<const double> logits, std::size_t label);

// softmax(logits) - onehot(label)
std::vector<double> CrossEntropyGrad(std::span<const double> logits,
                                     std::size_t label);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_FUNCTIONAL_H_
