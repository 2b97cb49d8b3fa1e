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

#ifndef NODEUNLEARN_MLP_H_
#define NODEUNLEARN_MLP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodeunlearn/matrix.h"
#include "nodeunlearn/random.h"

namespace nodeunlearn {

enum class Activation { kRelu, kTanh };

std::string_view ActivationName(Activation a);
Activation ParseActivation(std::string_view name);

double Activate(Activation a, double x);
// Derivative at pre-activation value `pre`; relu uses 0 at the kink.
double ActivateDerivative(Activation a, double pre);

// y = weight * x + bias, weight is out x in.
struct DenseLayer {
  Matrix weight;
  std::vector<double> bias;

  std::size_t in_dim() const { return weight.cols(); }
  std::size_t out_dim() const { return weight.rows(); }
};

// Activation cache of one batched forward pass.
struct MlpTape {
  std::uint64_t owner = 0;
  std::uint64_t version = 0;
  // inputs[l] is the (batch x in_l) input of layer l; pre[l] its
  // pre-activation output.
  std::vector<Matrix> inputs;
  std::vector<Matrix> pre;
};

struct MlpGradients {
  std::vector<DenseLayer> layers;
  Matrix input;
};

// Fully connected network. The activation is applied between layers; the
// output layer is linear. Batched calls process one sample per row.
class Mlp {
 public:
  Mlp() = default;
  Mlp(std::vector<DenseLayer> layers, Activation activation);
  Mlp(const Mlp& other);
  Mlp& operator=(const Mlp& other);
  Mlp(Mlp&& other) noexcept;
  Mlp& operator=(Mlp&& other) noexcept;

  // Glorot-uniform weights and zero biases for dims = {in, h1, ..., out}.
  static Mlp Create(std::span<const std::size_t> dims, Activation activation,
                    Rng& rng);

  std::size_t input_dim() const;
  std::size_t output_dim() const;
  std::size_t num_layers() const { return layers_.size(); }
  Activation activation() const { return activation_; }
  const std::vector<DenseLayer>& layers() const { return layers_; }
  std::size_t num_parameters() const;

  // Mutable parameter access invalidates outstanding tapes.
  std::vector<DenseLayer>& mutable_layers();
  // Flat views over (weight, bias) of every layer, in layer order.
  std::vector<std::span<double>> ParameterViews();

  Matrix Forward(const Matrix& batch, MlpTape* tape = nullptr) const;
  std::vector<double> Forward(std::span<const double> x) const;

  // Reverse pass for d(loss)/d(output) = upstream (batch x out).
  MlpGradients Backward(const MlpTape& tape, const Matrix& upstream) const;

 private:
  void Validate() const;

  std::vector<DenseLayer> layers_;
  Activation activation_ = Activation::kRelu;
  std::uint64_t id_ = 0;
  std::uint64_t version_ = 0;
};

// Flat views over gradients in the same order as Mlp::ParameterViews.
std::vector<std::span<const double>> GradientViews(const MlpGradients& g);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_MLP_H_
