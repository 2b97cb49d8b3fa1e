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

#ifndef NODEUNLEARN_BACKBONE_H_
#define NODEUNLEARN_BACKBONE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nodeunlearn/graph.h"
#include "nodeunlearn/linalg.h"
#include "nodeunlearn/matrix.h"

namespace nodeunlearn {

enum class BackboneKind { kGcn, kSgc };

std::string_view BackboneName(BackboneKind kind);
BackboneKind ParseBackbone(std::string_view name);

struct BackboneHyper {
  std::size_t hidden_dim = 16;  // GCN only
  int k_hops = 2;               // SGC only
  double learning_rate = 0.05;
  double weight_decay = 1e-4;
  int epochs = 200;
  std::uint64_t seed = 0;
};

// Node embeddings of the last two layers. `hidden` is the input to the final
// linear map (GCN: relu hidden layer; SGC: propagated features), `output` are
// the logits. One row per node.
struct Capture {
  Matrix hidden;
  Matrix output;
};

// Weights are stored for row-vector embeddings: GCN uses {W1 (d x hidden),
// W2 (hidden x c)}, SGC uses {W (d x c)}.
struct TrainedModel {
  BackboneKind kind = BackboneKind::kGcn;
  BackboneHyper hyper;
  std::vector<Matrix> weights;
  Capture capture;
  std::vector<double> loss_history;  // train cross-entropy before each step
  double train_seconds = 0.0;
};

struct ForwardPass {
  Matrix hidden;
  Matrix logits;
};

// hidden = relu(A X W1), logits = A hidden W2.
ForwardPass GcnForward(std::span<const Matrix> weights, const CsrMatrix& adj,
                       const Matrix& features);

// hidden = A^k X, logits = hidden W.
ForwardPass SgcForward(std::span<const Matrix> weights, const CsrMatrix& adj,
                       const Matrix& features, int k_hops);

ForwardPass Forward(const TrainedModel& model, const Graph& g);

// Glorot-initialised weights; capture left empty.
TrainedModel InitializeModel(BackboneKind kind, const BackboneHyper& hyper,
                             std::size_t feature_dim, std::size_t num_classes);

// Full-batch training with Adam on the mean cross-entropy of the train
// nodes, transductive over the whole graph. The capture is the forward pass
// of the final weights. Throws NumericalError if the loss turns non-finite.
TrainedModel TrainModel(const Graph& g, const SplitSpec& split,
                        BackboneKind kind, const BackboneHyper& hyper);

// Argmax class per row.
std::vector<int> PredictClasses(const Matrix& logits);

// Linear forward constraint between the hidden and output spaces for column
// vectors: output = h * hidden. h is dim_k x dim_{k-1}.
class DegenerateOperator {
 public:
  DegenerateOperator() = default;
  explicit DegenerateOperator(Matrix h,
                              double tolerance = kDefaultPinvTolerance);

  const Matrix& h() const { return h_; }
  const Matrix& h_pinv() const { return h_pinv_; }
  std::size_t input_dim() const { return h_.cols(); }
  std::size_t output_dim() const { return h_.rows(); }

  // I - h_pinv * h, materialised (input_dim x input_dim).
  Matrix NullProjector() const;
  // (I - h_pinv * h) v without forming the projector.
  std::vector<double> ProjectNull(std::span<const double> v) const;

 private:
  Matrix h_;
  Matrix h_pinv_;
};

// h = transpose of the last weight matrix.
DegenerateOperator ExtractDegenerateOperator(const TrainedModel& model);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_BACKBONE_H_
