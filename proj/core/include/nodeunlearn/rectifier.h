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

#ifndef NODEUNLEARN_RECTIFIER_H_
#define NODEUNLEARN_RECTIFIER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nodeunlearn/backbone.h"
#include "nodeunlearn/graph.h"
#include "nodeunlearn/mlp.h"

namespace nodeunlearn {

// hop_radius value meaning "every unlearned node affects every node".
inline constexpr int kUnboundedHops = -1;

struct RectifierConfig {
  std::size_t mlp_hidden = 64;
  int epochs = 200;
  double learning_rate = 1e-3;
  // Fraction of retained nodes, highest degree first, anchoring the local
  // search loss.
  double local_top_frac = 0.5;
  // Unlearned nodes farther than this from i do not contribute to i's
  // correction. kUnboundedHops disables the restriction.
  int hop_radius = 2;
  // Unset means automatic: high-ratio mode when beta > 0.3, the all-node
  // interaction loss when fewer than 50 nodes are unlearned.
  std::optional<bool> high_ratio_mode;
  std::optional<bool> inter_plus_mode;
  // Ablation switch: false feeds the raw reconstruction into the
  // interaction loss instead of its range-null corrected form.
  bool use_range_null = true;
  // Stop the ascent on an unlearned node once its cross-entropy reaches
  // chance level, ln(num_classes); false gives the unbounded ascent.
  bool bounded_ascent = true;
  Activation activation = Activation::kRelu;
  std::uint64_t seed = 0;
};

// Throws InvalidRequestError on out-of-range fields.
void ValidateRectifierConfig(const RectifierConfig& config);

// op.h_pinv * f1_out + (I - op.h_pinv * op.h) * f2_prelim
std::vector<double> RangeNullCorrect(const DegenerateOperator& op,
                                     std::span<const double> f1_out,
                                     std::span<const double> f2_prelim);

// 1 + 1 / mean degree of `nodes` in g; 1 when that mean is zero.
// Throws InvalidRequestError for an empty set.
double GammaFactor(const Graph& g, std::span<const NodeId> nodes);

// beta * (plus + inter) + (1 - beta) * local
double CombineLosses(double beta, double plus, double inter, double local);

// The trained correction module: an interaction network f1 mapping a pair
// of hidden embeddings (source first) to the output space, and a
// reconstruction network f2 mapping back to the hidden space.
class Rectifier {
 public:
  Rectifier(Mlp interaction, Mlp reconstruction, DegenerateOperator op,
            double gamma, double beta, RectifierConfig config);

  // f1 = [2*hidden -> mlp_hidden -> output], output layer zero so that the
  // untrained rectifier leaves embeddings unchanged; f2 = [output ->
  // mlp_hidden -> hidden], Glorot. Seeded by config.seed.
  static Rectifier Initialize(DegenerateOperator op, double gamma, double beta,
                              const RectifierConfig& config);

  const Mlp& interaction() const { return interaction_; }
  const Mlp& reconstruction() const { return reconstruction_; }
  Mlp& mutable_interaction() { return interaction_; }
  Mlp& mutable_reconstruction() { return reconstruction_; }
  const DegenerateOperator& op() const { return op_; }
  double gamma() const { return gamma_; }
  double beta() const { return beta_; }
  const RectifierConfig& config() const { return config_; }

  std::size_t hidden_dim() const { return op_.input_dim(); }
  std::size_t output_dim() const { return op_.output_dim(); }

  // f1(j, i): influence of node j on node i in the output space.
  std::vector<double> Interact(std::span<const double> hidden_j,
                               std::span<const double> hidden_i) const;
  // Preliminary reconstruction f2 of an interaction vector.
  std::vector<double> Reconstruct(std::span<const double> f1_out) const;
  // Reconstruction used by the interaction loss: range-null corrected
  // unless the ablation switch is off.
  std::vector<double> CorrectedReconstruction(std::span<const double> f1_out) const;

  // Parameter views of f1 followed by f2.
  std::vector<std::span<double>> ParameterViews();

 private:
  Mlp interaction_;
  Mlp reconstruction_;
  DegenerateOperator op_;
  double gamma_ = 1.0;
  double beta_ = 0.0;
  RectifierConfig config_;
};

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_RECTIFIER_H_
