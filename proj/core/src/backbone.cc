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

#include "nodeunlearn/backbone.h"

#include <chrono>
#include <cmath>
#include <string>

#include "nodeunlearn/error.h"
#include "nodeunlearn/functional.h"
#include "nodeunlearn/optimizer.h"
#include "nodeunlearn/random.h"

namespace nodeunlearn {
namespace {

void Relu(Matrix& m) {
  for (double& v : m.data()) v = v > 0.0 ? v : 0.0;
}

void RequireWeights(std::span<const Matrix> weights, std::size_t count,
                    const char* who) {
  if (weights.size() != count) {
    throw ShapeError(std::string(who) + ": expected " + std::to_string(count) +
                     " weight matrices, got " + std::to_string(weights.size()));
  }
}

Matrix Propagate(const CsrMatrix& adj, const Matrix& x, int k_hops) {
  Matrix out = x;
  for (int k = 0; k < k_hops; ++k) out = adj.Multiply(out);
  return out;
}

// Mean cross-entropy over `ids` and its gradient wrt all logits (rows outside
// `ids` get zero gradient).
double CrossEntropyLoss(const Matrix& logits, const std::vector<int>& labels,
                        std::span<const NodeId> ids, Matrix* grad) {
  const double scale = 1.0 / static_cast<double>(ids.size());
  if (grad != nullptr) *grad = Matrix(logits.rows(), logits.cols());
  double loss = 0.0;
  for (NodeId id : ids) {
    const auto label = static_cast<std::size_t>(labels[id]);
    loss += CrossEntropy(logits.row(id), label);
    if (grad != nullptr) {
      const std::vector<double> g = CrossEntropyGrad(logits.row(id), label);
      auto dst = grad->row(id);
      for (std::size_t c = 0; c < g.size(); ++c) dst[c] = g[c] * scale;
    }
  }
  return loss * scale;
}

std::vector<std::span<double>> Views(std::vector<Matrix>& ms) {
  std::vector<std::span<double>> v;
  for (Matrix& m : ms) v.emplace_back(m.data());
  return v;
}

std::vector<std::span<const double>> ConstViews(const std::vector<Matrix>& ms) {
  std::vector<std::span<const double>> v;
  for (const Matrix& m : ms) v.emplace_back(m.data());
  return v;
}

}  // namespace

std::string_view BackboneName(BackboneKind kind) {
  return kind == BackboneKind::kGcn ? "gcn" : "sgc";
}

BackboneKind ParseBackbone(std::string_view name) {
  if (name == "gcn") return BackboneKind::kGcn;
  if (name == "sgc") return BackboneKind::kSgc;
  throw InvalidRequestError("unknown backbone '" + std::string(name) + "'");
}

ForwardPass GcnForward(std::span<const Matrix> weights, const CsrMatrix& adj,
                       const Matrix& features) {
  RequireWeights(weights, 2, "GcnForward");
  if (features.rows() != adj.rows()) {
    throw ShapeError("GcnForward: feature rows do not match adjacency");
  }
  Matrix hidden = MatMul(adj.Multiply(features), weights[0]);
  Relu(hidden);
  Matrix logits = adj.Multiply(MatMul(hidden, weights[1]));
  return ForwardPass{std::move(hidden), std::move(logits)};
}

ForwardPass SgcForward(std::span<const Matrix> weights, const CsrMatrix& adj,
                       const Matrix& features, int k_hops) {
  RequireWeights(weights, 1, "SgcForward");
  if (k_hops < 1) throw InvalidRequestError("SgcForward: k_hops must be >= 1");
  if (features.rows() != adj.rows()) {
    throw ShapeError("SgcForward: feature rows do not match adjacency");
  }
  Matrix hidden = Propagate(adj, features, k_hops);
  Matrix logits = MatMul(hidden, weights[0]);
  return ForwardPass{std::move(hidden), std::move(logits)};
}

ForwardPass Forward(const TrainedModel& model, const Graph& g) {
  const CsrMatrix adj = NormalizeAdjacency(g);
  if (model.kind == BackboneKind::kGcn) {
    return GcnForward(model.weights, adj, g.features());
  }
  return SgcForward(model.weights, adj, g.features(), model.hyper.k_hops);
}

TrainedModel InitializeModel(BackboneKind kind, const BackboneHyper& hyper,
                             std::size_t feature_dim, std::size_t num_classes) {
  TrainedModel model;
  model.kind = kind;
  model.hyper = hyper;
  Rng rng = MakeRng(hyper.seed, kStreamBackboneInit);
  if (kind == BackboneKind::kGcn) {
    if (hyper.hidden_dim == 0) throw InvalidRequestError("hidden_dim must be >= 1");
    Matrix w1(feature_dim, hyper.hidden_dim);
    Matrix w2(hyper.hidden_dim, num_classes);
    GlorotUniform(w1, feature_dim, hyper.hidden_dim, rng);
    GlorotUniform(w2, hyper.hidden_dim, num_classes, rng);
    model.weights = {std::move(w1), std::move(w2)};
  } else {
    if (hyper.k_hops < 1) throw InvalidRequestError("k_hops must be >= 1");
    Matrix w(feature_dim, num_classes);
    GlorotUniform(w, feature_dim, num_classes, rng);
    model.weights = {std::move(w)};
  }
  return model;
}

TrainedModel TrainModel(const Graph& g, const SplitSpec& split,
                        BackboneKind kind, const BackboneHyper& hyper) {
  ValidateSplit(split, g.num_nodes());
  if (split.train.empty()) throw InvalidRequestError("TrainModel: empty train set");
  if (hyper.epochs < 0) throw InvalidRequestError("TrainModel: epochs must be >= 0");

  const auto start = std::chrono::steady_clock::now();
  TrainedModel model = InitializeModel(kind, hyper, g.feature_dim(), g.num_classes());
  AdamOptimizer optimizer(AdamOptions{.learning_rate = hyper.learning_rate,
                                      .weight_decay = hyper.weight_decay});
  const CsrMatrix adj = NormalizeAdjacency(g);
  const std::vector<int>& labels = g.labels();

  if (kind == BackboneKind::kGcn) {
    const Matrix ax = adj.Multiply(g.features());
    for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
      const Matrix& w1 = model.weights[0];
      const Matrix& w2 = model.weights[1];
      const Matrix z1 = MatMul(ax, w1);
      Matrix h1 = z1;
      Relu(h1);
      const Matrix logits = adj.Multiply(MatMul(h1, w2));
      Matrix dlogits;
      const double loss = CrossEntropyLoss(logits, labels, split.train, &dlogits);
      if (!std::isfinite(loss)) {
        throw NumericalError("TrainModel: non-finite loss at epoch " + std::to_string(epoch));
      }
      model.loss_history.push_back(loss);
      // The normalized adjacency is symmetric, so A^T dlogits = A dlogits.
      const Matrix dq = adj.Multiply(dlogits);
      std::vector<Matrix> grads(2);
      grads[1] = MatMulTransA(h1, dq);
      Matrix dz1 = MatMulTransB(dq, w2);
      for (std::size_t i = 0; i < dz1.size(); ++i) {
        if (!(z1.data()[i] > 0.0)) dz1.data()[i] = 0.0;
      }
      grads[0] = MatMulTransA(ax, dz1);
      optimizer.Step(Views(model.weights), ConstViews(grads));
    }
  } else {
    const Matrix propagated = Propagate(adj, g.features(), hyper.k_hops);
    for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
      const Matrix logits = MatMul(propagated, model.weights[0]);
      Matrix dlogits;
      const double loss = CrossEntropyLoss(logits, labels, split.train, &dlogits);
      if (!std::isfinite(loss)) {
        throw NumericalError("TrainModel: non-finite loss at epoch " + std::to_string(epoch));
      }
      model.loss_history.push_back(loss);
      std::vector<Matrix> grads{MatMulTransA(propagated, dlogits)};
      optimizer.Step(Views(model.weights), ConstViews(grads));
    }
  }

  for (const Matrix& w : model.weights) {
    if (!w.AllFinite()) throw NumericalError("TrainModel: non-finite weights");
  }
  ForwardPass pass = Forward(model, g);
  model.capture = Capture{std::move(pass.hidden), std::move(pass.logits)};
  model.train_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return model;
}

std::vector<int> PredictClasses(const Matrix& logits) {
  std::vector<int> out(logits.rows());
  for (std::size_t r = 0; r < logits.rows(); ++r) {
    out[r] = static_cast<int>(ArgMax(logits.row(r)));
  }
  return out;
}

DegenerateOperator::DegenerateOperator(Matrix h, double tolerance)
    : h_(std::move(h)), h_pinv_(PseudoInverse(h_, tolerance)) {}

Matrix DegenerateOperator::NullProjector() const {
  Matrix p = Matrix::Identity(input_dim());
  p -= MatMul(h_pinv_, h_);
  return p;
}

std::vector<double> DegenerateOperator::ProjectNull(std::span<const double> v) const {
  const std::vector<double> range = MatVec(h_pinv_, MatVec(h_, v));
  std::vector<double> out(v.begin(), v.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= range[i];
  return out;
}

DegenerateOperator ExtractDegenerateOperator(const TrainedModel& model) {
  if (model.weights.empty()) {
    throw InvalidRequestError("ExtractDegenerateOperator: model has no weights");
  }
  return DegenerateOperator(model.weights.back().Transpose());
}

}  // namespace nodeunlearn
