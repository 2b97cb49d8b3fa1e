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

#ifndef NODEUNLEARN_UNLEARNING_H_
#define NODEUNLEARN_UNLEARNING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "nodeunlearn/backbone.h"
#include "nodeunlearn/graph.h"
#include "nodeunlearn/matrix.h"
#include "nodeunlearn/mlp.h"
#include "nodeunlearn/rectifier.h"

namespace nodeunlearn {

// Everything the rectifier needs about one request, in original node ids.
struct UnlearningProblem {
  RequestKind kind = RequestKind::kNodes;
  Matrix hidden;  // h^{k-1} of the original model, one row per node
  Matrix anchor;  // embedding the corrections are subtracted from
  std::vector<int> labels;
  // Unlearned nodes (node requests) or endpoints of unlearned edges.
  std::vector<NodeId> removed;
  // sources[i]: nodes j whose interaction f1(j, i) is subtracted from i.
  std::vector<std::vector<NodeId>> sources;
  // Interaction loss terms: target m aggregates f1(m, i) over its neighbours.
  std::vector<NodeId> inter_targets;
  std::vector<std::vector<NodeId>> inter_neighbors;
  std::vector<NodeId> local_set;   // retained high-degree nodes
  std::vector<NodeId> ascent_set;  // nodes whose labels are unlearned
  std::vector<bool> retained;
  double gamma = 1.0;
  double beta = 0.0;
  bool high_ratio = false;
  bool inter_plus = false;

  std::size_t num_nodes() const { return hidden.rows(); }
};

// Builds the problem for a node request against `model` trained on g. The
// automatic modes in `config` are resolved here. In high-ratio mode the
// anchor is the original model run on the pruned graph.
UnlearningProblem PrepareNodeUnlearning(const TrainedModel& model, const Graph& g,
                                        const UnlearnRequest& request,
                                        const RectifierConfig& config);

// Same for an edge request. Affected nodes are the endpoints; there is no
// label ascent term.
UnlearningProblem PrepareEdgeUnlearning(const TrainedModel& model, const Graph& g,
                                        const UnlearnRequest& request,
                                        const RectifierConfig& config);

// Original logits with the survivors' rows replaced by the original weights
// applied to the pruned graph. Throws InvalidRequestError if nothing would
// survive.
Matrix PrunedGraphInference(const TrainedModel& model, const Graph& g,
                            std::span<const NodeId> removed);

struct LossBreakdown {
  double inter = 0.0;
  double local = 0.0;
  double plus = 0.0;
  double total = 0.0;
};

struct RectifierGradients {
  MlpGradients interaction;
  MlpGradients reconstruction;
};

// Evaluates all three loss terms; with `grads` also the gradient of the
// total wrt both networks. Throws InvalidRequestError when every
// interaction target is isolated or the local set is empty.
LossBreakdown EvaluateLosses(const Rectifier& rectifier,
                             const UnlearningProblem& problem,
                             RectifierGradients* grads = nullptr);

double LossInter(const Rectifier& rectifier, const UnlearningProblem& problem);
double LossLocal(const Rectifier& rectifier, const UnlearningProblem& problem);
double LossPlus(const Rectifier& rectifier, const UnlearningProblem& problem);

struct RectifierTraining {
  Rectifier rectifier;
  std::vector<LossBreakdown> history;  // one entry per epoch, before the step
  double train_seconds = 0.0;
};

// Trains a fresh rectifier for `problem` with Adam. Throws NumericalError if
// the loss becomes non-finite.
RectifierTraining TrainRectifier(const UnlearningProblem& problem,
                                 DegenerateOperator op,
                                 const RectifierConfig& config);

// h~_i = anchor_i - gamma * sum_{j in sources[i]} f1(j, i).
std::vector<double> UnlearnedEmbedding(const Rectifier& rectifier,
                                       const UnlearningProblem& problem, NodeId i);

struct UnlearnedEmbeddings {
  Matrix h_tilde;                   // every original node
  Matrix retained_view;             // retained rows only, in id order
  std::vector<NodeId> retained_ids; // original ids of retained_view rows
};

UnlearnedEmbeddings UnlearnNodes(const Rectifier& rectifier,
                                 const UnlearningProblem& problem);

// Rebuilds the high-ratio anchor for `request` and applies the rectifier.
UnlearnedEmbeddings HighRatioUnlearn(const TrainedModel& model, const Graph& g,
                                     const UnlearnRequest& request,
                                     const Rectifier& rectifier);

// Applies a rectifier trained for an edge problem.
UnlearnedEmbeddings EdgeUnlearn(const Rectifier& rectifier,
                                const UnlearningProblem& problem);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_UNLEARNING_H_
