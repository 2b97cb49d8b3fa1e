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

#ifndef NODEUNLEARN_GRAPH_H_
#define NODEUNLEARN_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nodeunlearn/matrix.h"

namespace nodeunlearn {

using NodeId = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with node features and class labels. Node ids are
// dense 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  // Validates every invariant: edges canonical (u < v), no self-loops, no
  // duplicates, endpoints in range, labels < num_classes. Edges need not be
  // sorted; they are stored sorted.
  Graph(Matrix features, std::vector<int> labels, std::size_t num_classes,
        std::vector<Edge> edges, std::string name = "");

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t feature_dim() const { return features_.cols(); }
  std::size_t num_classes() const { return num_classes_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::string& name() const { return name_; }

  const Matrix& features() const { return features_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<NodeId>& col_idx() const { return col_idx_; }

  std::span<const NodeId> neighbors(NodeId node) const {
    return {col_idx_.data() + row_ptr_[node],
            row_ptr_[node + 1] - row_ptr_[node]};
  }
  std::size_t degree(NodeId node) const {
    return row_ptr_[node + 1] - row_ptr_[node];
  }
  bool HasEdge(NodeId a, NodeId b) const;

  // Copy with labels replaced; the structure is shared by value.
  Graph WithLabels(std::vector<int> labels) const;

 private:
  Matrix features_;
  std::vector<int> labels_;
  std::size_t num_classes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<NodeId> col_idx_;
  std::string name_;
};

struct SplitSpec {
  std::vector<NodeId> train;
  std::vector<NodeId> test;
};

// Throws InvalidRequestError unless train/test are disjoint subsets of [0, n).
void ValidateSplit(const SplitSpec& split, std::size_t n);

enum class RequestKind { kNodes, kEdges };

struct UnlearnRequest {
  RequestKind kind = RequestKind::kNodes;
  std::vector<NodeId> nodes;  // sorted
  std::vector<Edge> edges;    // sorted, canonical
  double beta = 0.0;
};

// old_to_new[i] is -1 for removed nodes.
struct NodeRemap {
  std::vector<std::int64_t> old_to_new;
  std::vector<NodeId> new_to_old;
};

struct PrunedGraph {
  Graph graph;
  NodeRemap remap;
};

// D^-1/2 (A + I) D^-1/2 with D the degree matrix of A + I.
CsrMatrix NormalizeAdjacency(const Graph& g);

// Induced subgraph on the complement of `removed`. Survivors keep their
// relative order.
PrunedGraph RemoveNodes(const Graph& g, std::span<const NodeId> removed);

// Same node set with the listed edges deleted. Unknown edges throw
// InvalidRequestError.
Graph RemoveEdges(const Graph& g, std::span<const Edge> removed);

// Split restricted to survivors, translated to new ids.
SplitSpec RemapSplit(const SplitSpec& split, const NodeRemap& remap);

// floor(train_frac * n) nodes for training, the rest for testing; both sorted.
SplitSpec SplitTrainTest(const Graph& g, double train_frac, std::uint64_t seed);

// round(ratio * |train|) training nodes chosen uniformly per seed.
UnlearnRequest SampleUnlearnSet(const SplitSpec& split, double ratio,
                                std::uint64_t seed);

// round(ratio * |E|) edges chosen uniformly per seed.
UnlearnRequest SampleUnlearnEdges(const Graph& g, double ratio,
                                  std::uint64_t seed);

// label' = (label + 1) mod num_classes for nodes in `poisoned`.
Graph PoisonLabels(const Graph& g, std::span<const NodeId> poisoned);

// Nodes at hop distance <= radius from `source` (source included), sorted.
// A negative radius means unbounded (the connected component).
std::vector<NodeId> NodesWithinHops(const Graph& g, NodeId source, int radius);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_GRAPH_H_
