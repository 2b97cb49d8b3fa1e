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

#include "nodeunlearn/mlp.h"

#include <atomic>
#include <cmath>
#include <string>

#include "nodeunlearn/error.h"

namespace nodeunlearn {
namespace {

std::uint64_t NextMlpId() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

}  // namespace

double Activate(Activation a, double x) {
  switch (a) {
    case Activation::kRelu:
      return x > 0.0 ? x : 0.0;
    case Activation::kTanh:
      return std::tanh(x);
  }
  return x;
}

double ActivateDerivative(Activation a, double pre) {
  switch (a) {
    case Activation::kRelu:
      return pre > 0.0 ? 1.0 : 0.0;
    case Activation::kTanh: {
      const double t = std::tanh(pre);
      return 1.0 - t * t;
    }
  }
  return 1.0;
}

std::string_view ActivationName(Activation a) {
  return a == Activation::kRelu ? "relu" : "tanh";
}

Activation ParseActivation(std::string_view name) {
  if (name == "relu") return Activation::kRelu;
  if (name == "tanh") return Activation::kTanh;
  throw InvalidRequestError("unknown activation '" + std::string(name) + "'");
}

Mlp::Mlp(std::vector<DenseLayer> layers, Activation activation)
    : layers_(std::move(layers)), activation_(activation), id_(NextMlpId()) {
  Validate();
}

Mlp::Mlp(const Mlp& other)
    : layers_(other.layers_),
      activation_(other.activation_),
      id_(NextMlpId()),
      version_(0) {}

Mlp& Mlp::operator=(const Mlp& other) {
  if (this != &other) {
    layers_ = other.layers_;
    activation_ = other.activation_;
    ++version_;
  }
  return *this;
}

Mlp::Mlp(Mlp&& other) noexcept
    : layers_(std::move(other.layers_)),
      activation_(other.activation_),
      id_(other.id_),
      version_(other.version_) {
  other.id_ = NextMlpId();
  other.version_ = 0;
}

Mlp& Mlp::operator=(Mlp&& other) noexcept {
  if (this != &other) {
    layers_ = std::move(other.layers_);
    activation_ = other.activation_;
    id_ = other.id_;
    version_ = other.version_;
    other.id_ = NextMlpId();
    other.version_ = 0;
  }
  return *this;
}

Mlp Mlp::Create(std::span<const std::size_t> dims, Activation activation,
                Rng& rng) {
  if (dims.size() < 2) {
    throw ShapeError("Mlp::Create: need at least input and output dims");
  }
  std::vector<DenseLayer> layers;
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    DenseLayer layer{Matrix(dims[l + 1], dims[l]),
                     std::vector<double>(dims[l + 1], 0.0)};
    GlorotUniform(layer.weight, dims[l], dims[l + 1], rng);
    layers.push_back(std::move(layer));
  }
  return Mlp(std::move(layers), activation);
}

void Mlp::Validate() const {
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const DenseLayer& layer = layers_[l];
    if (layer.bias.size() != layer.out_dim()) {
      throw ShapeError("Mlp: layer " + std::to_string(l) + " bias length " +
                       std::to_string(layer.bias.size()) + " != out dim " +
                       std::to_string(layer.out_dim()));
    }
    if (l > 0 && layers_[l - 1].out_dim() != layer.in_dim()) {
      throw ShapeError("Mlp: layer " + std::to_string(l - 1) + " out dim " +
                       std::to_string(layers_[l - 1].out_dim()) +
                       " does not chain into in dim " +
                       std::to_string(layer.in_dim()));
    }
  }
}

std::size_t Mlp::input_dim() const {
  return layers_.empty() ? 0 : layers_.front().in_dim();
}

std::size_t Mlp::output_dim() const {
  return layers_.empty() ? 0 : layers_.back().out_dim();
}

std::size_t Mlp::num_parameters() const {
  std::size_t n = 0;
  for (const DenseLayer& layer : layers_) {
    n += layer.weight.size() + layer.bias.size();
  }
  return n;
}

std::vector<DenseLayer>& Mlp::mutable_layers() {
  ++version_;
  return layers_;
}

std::vector<std::span<double>> Mlp::ParameterViews() {
  ++version_;
  std::vector<std::span<double>> views;
  for (DenseLayer& layer : layers_) {
    views.emplace_back(layer.weight.data());
    views.emplace_back(layer.bias);
  }
  return views;
}

Matrix Mlp::Forward(const Matrix& batch, MlpTape* tape) const {
  if (layers_.empty()) throw ShapeError("Mlp::Forward: empty network");
  if (batch.cols() != input_dim()) {
    throw ShapeError("Mlp::Forward: input dim " + std::to_string(batch.cols()) +
                     " != " + std::to_string(input_dim()));
  }
  if (tape != nullptr) {
    tape->owner = id_;
    tape->version = version_;
    tape->inputs.clear();
    tape->pre.clear();
  }
  Matrix x = batch;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const DenseLayer& layer = layers_[l];
    Matrix z = MatMulTransB(x, layer.weight);
    for (std::size_t r = 0; r < z.rows(); ++r) {
      auto row = z.row(r);
      for (std::size_t c = 0; c < row.size(); ++c) row[c] += layer.bias[c];
    }
    const bool last = (l + 1 == layers_.size());
    if (tape != nullptr) tape->inputs.push_back(std::move(x));
    if (last) {
      if (tape != nullptr) tape->pre.push_back(z);
      return z;
    }
    Matrix h = z;
    for (double& v : h.data()) v = Activate(activation_, v);
    if (tape != nullptr) tape->pre.push_back(std::move(z));
    x = std::move(h);
  }
  return x;
}

std::vector<double> Mlp::Forward(std::span<const double> x) const {
  Matrix batch(1, x.size(), std::vector<double>(x.begin(), x.end()));
  Matrix y = Forward(batch);
  return std::vector<double>(y.data().begin(), y.data().end());
}

MlpGradients Mlp::Backward(const MlpTape& tape, const Matrix& upstream) const {
  if (tape.owner != id_ || tape.version != version_ ||
      tape.inputs.size() != layers_.size()) {
    throw ContractViolation(
        "Mlp::Backward: tape was not produced by the current parameters of "
        "this network");
  }
  const std::size_t batch = tape.inputs.front().rows();
  if (upstream.rows() != batch || upstream.cols() != output_dim()) {
    throw ShapeError("Mlp::Backward: upstream shape does not match output");
  }
  MlpGradients grads;
  grads.layers.resize(layers_.size());
  Matrix dz = upstream;
  for (std::size_t l = layers_.size(); l-- > 0;) {
    const DenseLayer& layer = layers_[l];
    DenseLayer& g = grads.layers[l];
    g.weight = MatMulTransA(dz, tape.inputs[l]);
    g.bias.assign(layer.out_dim(), 0.0);
    for (std::size_t r = 0; r < dz.rows(); ++r) {
      auto row = dz.row(r);
      for (std::size_t c = 0; c < row.size(); ++c) g.bias[c] += row[c];
    }
    Matrix dx = MatMul(dz, layer.weight);
    if (l == 0) {
      grads.input = std::move(dx);
      break;
    }
    const Matrix& pre = tape.pre[l - 1];
    for (std::size_t i = 0; i < dx.size(); ++i) {
      dx.data()[i] *= ActivateDerivative(activation_, pre.data()[i]);
    }
    dz = std::move(dx);
  }
  return grads;
}

std::vector<std::span<const double>> GradientViews(const MlpGradients& g) {
  std::vector<std::span<const double>> views;
  for (const DenseLayer& layer : g.layers) {
    views.emplace_back(layer.weight.data());
    views.emplace_back(layer.bias);
  }
  return views;
}

}  // namespace nodeunlearn
