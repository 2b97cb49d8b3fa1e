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

#include "nodeunlearn/graph.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "nodeunlearn/error.h"
#include "nodeunlearn/random.h"

namespace nodeunlearn {
namespace {

std::string EdgeString(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

template <typename T>
std::vector<T> ShuffledCopy(std::vector<T> items, Rng& rng) {
  std::shuffle(items.begin(), items.end(), rng);
  return items;
}

}  // namespace

Graph::Graph(Matrix features, std::vector<int> labels, std::size_t num_classes,
             std::vector<Edge> edges, std::string name)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      num_classes_(num_classes),
      edges_(std::move(edges)),
      name_(std::move(name)) {
  const std::size_t n = labels_.size();
  if (features_.rows() != n) {
    throw ShapeError("Graph: " + std::to_string(features_.rows()) +
                     " feature rows for " + std::to_string(n) + " nodes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels_[i] < 0 || static_cast<std::size_t>(labels_[i]) >= num_classes_) {
      throw IndexError("Graph: node " + std::to_string(i) + " label " +
                       std::to_string(labels_[i]) + " outside [0," +
                       std::to_string(num_classes_) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.u >= n || e.v >= n) {
      throw IndexError("Graph: edge " + EdgeString(e) + " out of range");
    }
    if (e.u == e.v) throw InvalidRequestError("Graph: self-loop " + EdgeString(e));
    if (e.u > e.v) {
      throw InvalidRequestError("Graph: edge " + EdgeString(e) +
                                " not in canonical u < v order");
    }
    if (k > 0 && edges_[k - 1] == e) {
      throw InvalidRequestError("Graph: duplicate edge " + EdgeString(e));
    }
  }

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  row_ptr_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) row_ptr_[i + 1] = row_ptr_[i] + degree[i];
  col_idx_.assign(row_ptr_[n], 0);
  std::vector<std::size_t> cursor(row_ptr_.begin(), row_ptr_.end() - 1);
  for (const Edge& e : edges_) {
    col_idx_[cursor[e.u]++] = e.v;
    col_idx_[cursor[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]),
              col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]));
  }
}

bool Graph::HasEdge(NodeId a, NodeId b) const {
  if (a >= num_nodes() || b >= num_nodes()) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph Graph::WithLabels(std::vector<int> labels) const {
  return Graph(features_, std::move(labels), num_classes_, edges_, name_);
}

void ValidateSplit(const SplitSpec& split, std::size_t n) {
  std::vector<char> seen(n, 0);
  auto mark = [&](const std::vector<NodeId>& ids, const char* which) {
    for (NodeId id : ids) {
      if (id >= n) {
        throw IndexError(std::string("split: ") + which + " id " +
                         std::to_string(id) + " >= n=" + std::to_string(n));
      }
      if (seen[id]) {
        throw InvalidRequestError("split: node " + std::to_string(id) +
                                  " listed twice");
      }
      seen[id] = 1;
    }
  };
  mark(split.train, "train");
  mark(split.test, "test");
}

CsrMatrix NormalizeAdjacency(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> inv_sqrt(n);
  for (NodeId i = 0; i < n; ++i) {
    inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(g.degree(i) + 1));
  }
  std::vector<std::size_t> row_ptr(n + 1, 0);
  std::vector<std::size_t> cols;
  std::vector<double> vals;
  cols.reserve(g.col_idx().size() + n);
  vals.reserve(g.col_idx().size() + n);
  for (NodeId i = 0; i < n; ++i) {
    bool self_done = false;
    for (NodeId j : g.neighbors(i)) {
      if (!self_done && j > i) {
        cols.push_back(i);
        vals.push_back(inv_sqrt[i] * inv_sqrt[i]);
        self_done = true;
      }
      cols.push_back(j);
      vals.push_back(inv_sqrt[i] * inv_sqrt[j]);
    }
    if (!self_done) {
      cols.push_back(i);
      vals.push_back(inv_sqrt[i] * inv_sqrt[i]);
    }
    row_ptr[i + 1] = cols.size();
  }
  return CsrMatrix(n, std::move(row_ptr), std::move(cols), std::move(vals));
}

PrunedGraph RemoveNodes(const Graph& g, std::span<const NodeId> removed) {
  const std::size_t n = g.num_nodes();
  std::vector<char> drop(n, 0);
  for (NodeId id : removed) {
    if (id >= n) {
      throw IndexError("RemoveNodes: node " + std::to_string(id) +
                       " >= n=" + std::to_string(n));
    }
    drop[id] = 1;
  }
  NodeRemap remap;
  remap.old_to_new.assign(n, -1);
  for (NodeId i = 0; i < n; ++i) {
    if (drop[i]) continue;
    remap.old_to_new[i] = static_cast<std::int64_t>(remap.new_to_old.size());
    remap.new_to_old.push_back(i);
  }
  const std::size_t kept = remap.new_to_old.size();
  Matrix features(kept, g.feature_dim());
  std::vector<int> labels(kept);
  for (std::size_t k = 0; k < kept; ++k) {
    const NodeId old = remap.new_to_old[k];
    auto src = g.features().row(old);
    std::copy(src.begin(), src.end(), features.row(k).begin());
    labels[k] = g.labels()[old];
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (drop[e.u] || drop[e.v]) continue;
    edges.push_back({static_cast<NodeId>(remap.old_to_new[e.u]),
                     static_cast<NodeId>(remap.old_to_new[e.v])});
  }
  return PrunedGraph{Graph(std::move(features), std::move(labels),
                           g.num_classes(), std::move(edges), g.name()),
                     std::move(remap)};
}

Graph RemoveEdges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (Edge& e : drop) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!g.HasEdge(e.u, e.v)) {
      throw InvalidRequestError("RemoveEdges: unknown edge " + EdgeString(e));
    }
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(g.features(), g.labels(), g.num_classes(), std::move(kept),
               g.name());
}

SplitSpec RemapSplit(const SplitSpec& split, const NodeRemap& remap) {
  SplitSpec out;
  auto translate = [&](const std::vector<NodeId>& ids,
                       std::vector<NodeId>& dst) {
    for (NodeId id : ids) {
      const std::int64_t mapped = remap.old_to_new.at(id);
      if (mapped >= 0) dst.push_back(static_cast<NodeId>(mapped));
    }
    std::sort(dst.begin(), dst.end());
  };
  translate(split.train, out.train);
  translate(split.test, out.test);
  return out;
}

SplitSpec SplitTrainTest(const Graph& g, double train_frac, std::uint64_t seed) {
  if (!(train_frac > 0.0 && train_frac < 1.0)) {
    throw InvalidRequestError("SplitTrainTest: train_frac must be in (0,1)");
  }
  const std::size_t n = g.num_nodes();
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  Rng rng = MakeRng(seed, kStreamSplit);
  ids = ShuffledCopy(std::move(ids), rng);
  const auto n_train =
      static_cast<std::size_t>(std::floor(train_frac * static_cast<double>(n)));
  SplitSpec split;
  split.train.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n_train));
  split.test.assign(ids.begin() + static_cast<std::ptrdiff_t>(n_train), ids.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

UnlearnRequest SampleUnlearnSet(const SplitSpec& split, double ratio,
                                std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw InvalidRequestError("SampleUnlearnSet: ratio must be in (0,1)");
  }
  const std::size_t n_train = split.train.size();
  const auto k = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(n_train)));
  if (k == 0 || k >= n_train) {
    throw InvalidRequestError("SampleUnlearnSet: ratio " + std::to_string(ratio) +
                              " selects " + std::to_string(k) + " of " +
                              std::to_string(n_train) + " training nodes");
  }
  Rng rng = MakeRng(seed, kStreamUnlearnSet);
  std::vector<NodeId> shuffled = ShuffledCopy(split.train, rng);
  UnlearnRequest request;
  request.kind = RequestKind::kNodes;
  request.nodes.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(request.nodes.begin(), request.nodes.end());
  request.beta = static_cast<double>(k) / static_cast<double>(n_train);
  return request;
}

UnlearnRequest SampleUnlearnEdges(const Graph& g, double ratio,
                                  std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw InvalidRequestError("SampleUnlearnEdges: ratio must be in (0,1)");
  }
  const std::size_t m = g.num_edges();
  const auto k =
      static_cast<std::size_t>(std::llround(ratio * static_cast<double>(m)));
  if (k == 0 || k >= m) {
    throw InvalidRequestError("SampleUnlearnEdges: ratio " + std::to_string(ratio) +
                              " selects " + std::to_string(k) + " of " +
                              std::to_string(m) + " edges");
  }
  Rng rng = MakeRng(seed, kStreamUnlearnSet);
  std::vector<Edge> shuffled = ShuffledCopy(g.edges(), rng);
  UnlearnRequest request;
  request.kind = RequestKind::kEdges;
  request.edges.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(request.edges.begin(), request.edges.end());
  request.beta = static_cast<double>(k) / static_cast<double>(m);
  return request;
}

Graph PoisonLabels(const Graph& g, std::span<const NodeId> poisoned) {
  std::vector<int> labels = g.labels();
  const int classes = static_cast<int>(g.num_classes());
  for (NodeId id : poisoned) {
    if (id >= labels.size()) {
      throw IndexError("PoisonLabels: node " + std::to_string(id) + " out of range");
    }
    labels[id] = (labels[id] + 1) % classes;
  }
  return g.WithLabels(std::move(labels));
}

std::vector<NodeId> NodesWithinHops(const Graph& g, NodeId source, int radius) {
  if (source >= g.num_nodes()) {
    throw IndexError("NodesWithinHops: node " + std::to_string(source) +
                     " out of range");
  }
  std::vector<int> dist(g.num_nodes(), -1);
  std::deque<NodeId> frontier{source};
  dist[source] = 0;
  std::vector<NodeId> reached{source};
  while (!frontier.empty()) {
    const NodeId x = frontier.front();
    frontier.pop_front();
    if (radius >= 0 && dist[x] >= radius) continue;
    for (NodeId y : g.neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      reached.push_back(y);
      frontier.push_back(y);
    }
  }
  std::sort(reached.begin(), reached.end());
  return reached;
}

}  // namespace nodeunlearn
