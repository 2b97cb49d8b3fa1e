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

#include "nodeunlearn/rectifier.h"

#include <string>

#include "nodeunlearn/error.h"
#include "nodeunlearn/random.h"

namespace nodeunlearn {

void ValidateRectifierConfig(const RectifierConfig& config) {
  if (config.mlp_hidden == 0) throw InvalidRequestError("rectifier: mlp_hidden must be >= 1");
  if (config.epochs < 0) throw InvalidRequestError("rectifier: epochs must be >= 0");
  if (!(config.learning_rate > 0.0)) {
    throw InvalidRequestError("rectifier: learning rate must be positive");
  }
  if (!(config.local_top_frac > 0.0 && config.local_top_frac <= 1.0)) {
    throw InvalidRequestError("rectifier: local_top_frac must be in (0,1]");
  }
  if (config.hop_radius < 1 && config.hop_radius != kUnboundedHops) {
    throw InvalidRequestError("rectifier: hop_radius must be >= 1 or unbounded");
  }
}

std::vector<double> RangeNullCorrect(const DegenerateOperator& op,
                                     std::span<const double> f1_out,
                                     std::span<const double> f2_prelim) {
  if (f1_out.size() != op.output_dim() || f2_prelim.size() != op.input_dim()) {
    throw ShapeError("RangeNullCorrect: expected f1 of " +
                     std::to_string(op.output_dim()) + " and f2 of " +
                     std::to_string(op.input_dim()));
  }
  std::vector<double> out = MatVec(op.h_pinv(), f1_out);
  const std::vector<double> null_part = op.ProjectNull(f2_prelim);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += null_part[i];
  return out;
}

double GammaFactor(const Graph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw InvalidRequestError("GammaFactor: empty node set");
  double total = 0.0;
  for (NodeId id : nodes) {
    if (id >= g.num_nodes()) {
      throw IndexError("GammaFactor: node " + std::to_string(id) + " out of range");
    }
    total += static_cast<double>(g.degree(id));
  }
  const double mean_degree = total / static_cast<double>(nodes.size());
  return mean_degree == 0.0 ? 1.0 : 1.0 + 1.0 / mean_degree;
}

double CombineLosses(double beta, double plus, double inter, double local) {
  return beta * (plus + inter) + (1.0 - beta) * local;
}

Rectifier::Rectifier(Mlp interaction, Mlp reconstruction, DegenerateOperator op,
                     double gamma, double beta, RectifierConfig config)
    : interaction_(std::move(interaction)),
      reconstruction_(std::move(reconstruction)),
      op_(std::move(op)),
      gamma_(gamma),
      beta_(beta),
      config_(std::move(config)) {
  const std::size_t hidden = op_.input_dim();
  const std::size_t output = op_.output_dim();
  if (interaction_.input_dim() != 2 * hidden || interaction_.output_dim() != output) {
    throw ShapeError("Rectifier: interaction network must map " +
                     std::to_string(2 * hidden) + " -> " + std::to_string(output));
  }
  if (reconstruction_.input_dim() != output || reconstruction_.output_dim() != hidden) {
    throw ShapeError("Rectifier: reconstruction network must map " +
                     std::to_string(output) + " -> " + std::to_string(hidden));
  }
  if (!(gamma_ >= 1.0)) throw InvalidRequestError("Rectifier: gamma must be >= 1");
  if (!(beta_ >= 0.0 && beta_ < 1.0)) {
    throw InvalidRequestError("Rectifier: beta must be in [0,1)");
  }
}

Rectifier Rectifier::Initialize(DegenerateOperator op, double gamma, double beta,
                                const RectifierConfig& config) {
  ValidateRectifierConfig(config);
  Rng rng = MakeRng(config.seed, kStreamRectifierInit);
  const std::size_t hidden = op.input_dim();
  const std::size_t output = op.output_dim();
  const std::size_t dims1[] = {2 * hidden, config.mlp_hidden, output};
  const std::size_t dims2[] = {output, config.mlp_hidden, hidden};
  Mlp interaction = Mlp::Create(dims1, config.activation, rng);
  Mlp reconstruction = Mlp::Create(dims2, config.activation, rng);
  interaction.mutable_layers().back().weight.Fill(0.0);
  return Rectifier(std::move(interaction), std::move(reconstruction), std::move(op),
                   gamma, beta, config);
}

std::vector<double> Rectifier::Interact(std::span<const double> hidden_j,
                                        std::span<const double> hidden_i) const {
  if (hidden_j.size() != hidden_dim() || hidden_i.size() != hidden_dim()) {
    throw ShapeError("Rectifier::Interact: embeddings must have dim " +
                     std::to_string(hidden_dim()));
  }
  std::vector<double> pair(hidden_j.begin(), hidden_j.end());
  pair.insert(pair.end(), hidden_i.begin(), hidden_i.end());
  return interaction_.Forward(pair);
}

std::vector<double> Rectifier::Reconstruct(std::span<const double> f1_out) const {
  if (f1_out.size() != output_dim()) {
    throw ShapeError("Rectifier::Reconstruct: input must have dim " +
                     std::to_string(output_dim()));
  }
  return reconstruction_.Forward(f1_out);
}

std::vector<double> Rectifier::CorrectedReconstruction(
    std::span<const double> f1_out) const {
  std::vector<double> prelim = Reconstruct(f1_out);
  if (!config_.use_range_null) return prelim;
  return RangeNullCorrect(op_, f1_out, prelim);
}

std::vector<std::span<double>> Rectifier::ParameterViews() {
  std::vector<std::span<double>> views = interaction_.ParameterViews();
  for (auto v : reconstruction_.ParameterViews()) views.push_back(v);
  return views;
}

}  // namespace nodeunlearn
