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

#include "nodeunlearn/unlearning.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "nodeunlearn/error.h"
#include "nodeunlearn/functional.h"
#include "nodeunlearn/optimizer.h"

namespace nodeunlearn {
namespace {

constexpr double kHighRatioThreshold = 0.3;
constexpr std::size_t kInterPlusThreshold = 50;

struct PairList {
  std::vector<NodeId> src;
  std::vector<NodeId> dst;

  void Add(NodeId s, NodeId d) {
    src.push_back(s);
    dst.push_back(d);
  }
  std::size_t size() const { return src.size(); }
};

// f1 over many (source, target) pairs. The first layer acts on the
// concatenation [h_src | h_dst], so it is split into two per-node
// projections computed once instead of once per pair.
struct InteractionForward {
  Matrix pre0;
  Mlp tail;
  MlpTape tail_tape;
  Matrix output;
};

void SplitFirstLayer(const Matrix& w, std::size_t dp, Matrix& wa, Matrix& wb) {
  wa = Matrix(w.rows(), dp);
  wb = Matrix(w.rows(), dp);
  for (std::size_t h = 0; h < w.rows(); ++h) {
    const auto row = w.row(h);
    std::copy(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dp), wa.row(h).begin());
    std::copy(row.begin() + static_cast<std::ptrdiff_t>(dp), row.end(), wb.row(h).begin());
  }
}

InteractionForward ForwardInteraction(const Mlp& f1, const Matrix& hidden,
                                      const PairList& pairs, bool record) {
  const std::size_t dp = hidden.cols();
  const DenseLayer& first = f1.layers().front();
  Matrix wa, wb;
  SplitFirstLayer(first.weight, dp, wa, wb);
  const Matrix a = MatMulTransB(hidden, wa);
  const Matrix b = MatMulTransB(hidden, wb);
  const std::size_t width = first.out_dim();

  InteractionForward fwd;
  fwd.pre0 = Matrix(pairs.size(), width);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    auto dst = fwd.pre0.row(r);
    const auto ra = a.row(pairs.src[r]);
    const auto rb = b.row(pairs.dst[r]);
    for (std::size_t h = 0; h < width; ++h) dst[h] = ra[h] + rb[h] + first.bias[h];
  }
  if (f1.num_layers() == 1) {
    fwd.output = fwd.pre0;
    return fwd;
  }
  Matrix act = fwd.pre0;
  for (double& v : act.data()) v = Activate(f1.activation(), v);
  fwd.tail = Mlp(std::vector<DenseLayer>(f1.layers().begin() + 1, f1.layers().end()),
                 f1.activation());
  fwd.output = fwd.tail.Forward(act, record ? &fwd.tail_tape : nullptr);
  return fwd;
}

MlpGradients BackwardInteraction(const Mlp& f1, const Matrix& hidden,
                                 const PairList& pairs, const InteractionForward& fwd,
                                 const Matrix& upstream) {
  const std::size_t dp = hidden.cols();
  MlpGradients grads;
  Matrix dz;
  if (f1.num_layers() == 1) {
    dz = upstream;
    grads.layers.resize(1);
  } else {
    MlpGradients tail = fwd.tail.Backward(fwd.tail_tape, upstream);
    dz = std::move(tail.input);
    for (std::size_t i = 0; i < dz.size(); ++i) {
      dz.data()[i] *= ActivateDerivative(f1.activation(), fwd.pre0.data()[i]);
    }
    grads.layers.resize(1);
    for (DenseLayer& l : tail.layers) grads.layers.push_back(std::move(l));
  }

  const std::size_t width = dz.cols();
  Matrix ga(hidden.rows(), width);
  Matrix gb(hidden.rows(), width);
  std::vector<double> bias(width, 0.0);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto row = dz.row(r);
    auto da = ga.row(pairs.src[r]);
    auto db = gb.row(pairs.dst[r]);
    for (std::size_t h = 0; h < width; ++h) {
      da[h] += row[h];
      db[h] += row[h];
      bias[h] += row[h];
    }
  }
  const Matrix dwa = MatMulTransA(ga, hidden);
  const Matrix dwb = MatMulTransA(gb, hidden);
  Matrix dw(width, 2 * dp);
  for (std::size_t h = 0; h < width; ++h) {
    auto row = dw.row(h);
    std::copy(dwa.row(h).begin(), dwa.row(h).end(), row.begin());
    std::copy(dwb.row(h).begin(), dwb.row(h).end(),
              row.begin() + static_cast<std::ptrdiff_t>(dp));
  }
  grads.layers[0] = DenseLayer{std::move(dw), std::move(bias)};
  return grads;
}

void RequireSortedUnique(std::span<const NodeId> nodes, std::size_t n, const char* who) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= n) {
      throw IndexError(std::string(who) + ": node " + std::to_string(nodes[i]) +
                       " out of range");
    }
    if (i > 0 && nodes[i] <= nodes[i - 1]) {
      throw InvalidRequestError(std::string(who) + ": nodes must be sorted and unique");
    }
  }
}

void RequireCapture(const TrainedModel& model, const Graph& g, const char* who) {
  if (model.capture.hidden.rows() != g.num_nodes() ||
      model.capture.output.rows() != g.num_nodes()) {
    throw ShapeError(std::string(who) + ": model capture does not cover the graph");
  }
}

// Highest-degree candidates first, ties by id; ceil(frac * count) of them.
std::vector<NodeId> TopDegree(const Graph& g, std::vector<NodeId> candidates, double frac) {
  if (candidates.empty()) return {};
  std::sort(candidates.begin(), candidates.end(), [&](NodeId a, NodeId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  auto keep = static_cast<std::size_t>(std::ceil(frac * static_cast<double>(candidates.size())));
  keep = std::clamp<std::size_t>(keep, 1, candidates.size());
  candidates.resize(keep);
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

void FillInteractionTargets(const Graph& g, std::span<const NodeId> targets,
                            UnlearningProblem& problem) {
  for (NodeId m : targets) {
    const auto nbrs = g.neighbors(m);
    if (nbrs.empty()) continue;
    problem.inter_targets.push_back(m);
    problem.inter_neighbors.emplace_back(nbrs.begin(), nbrs.end());
  }
}

std::vector<NodeId> AllNodes(std::size_t n) {
  std::vector<NodeId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<NodeId>(i);
  return all;
}

void RequireBeta(double beta, const char* who) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw InvalidRequestError(std::string(who) + ": beta must be in [0,1)");
  }
}

}  // namespace

Matrix PrunedGraphInference(const TrainedModel& model, const Graph& g,
                            std::span<const NodeId> removed) {
  RequireCapture(model, g, "PrunedGraphInference");
  const PrunedGraph pruned = RemoveNodes(g, removed);
  if (pruned.graph.num_nodes() == 0) {
    throw InvalidRequestError("PrunedGraphInference: every node would be removed");
  }
  const ForwardPass pass = Forward(model, pruned.graph);
  Matrix out = model.capture.output;
  for (std::size_t k = 0; k < pruned.remap.new_to_old.size(); ++k) {
    const auto src = pass.logits.row(k);
    std::copy(src.begin(), src.end(), out.row(pruned.remap.new_to_old[k]).begin());
  }
  return out;
}

UnlearningProblem PrepareNodeUnlearning(const TrainedModel& model, const Graph& g,
                                        const UnlearnRequest& request,
                                        const RectifierConfig& config) {
  ValidateRectifierConfig(config);
  if (request.kind != RequestKind::kNodes) {
    throw InvalidRequestError("PrepareNodeUnlearning: request is not a node request");
  }
  RequireCapture(model, g, "PrepareNodeUnlearning");
  RequireSortedUnique(request.nodes, g.num_nodes(), "PrepareNodeUnlearning");
  RequireBeta(request.beta, "PrepareNodeUnlearning");
  const std::size_t n = g.num_nodes();
  const std::vector<NodeId>& removed = request.nodes;

  UnlearningProblem problem;
  problem.kind = RequestKind::kNodes;
  problem.hidden = model.capture.hidden;
  problem.labels = g.labels();
  problem.removed = removed;
  problem.beta = request.beta;
  problem.high_ratio = config.high_ratio_mode.value_or(request.beta > kHighRatioThreshold);
  problem.inter_plus = config.inter_plus_mode.value_or(removed.size() < kInterPlusThreshold);
  problem.anchor = problem.high_ratio ? PrunedGraphInference(model, g, removed)
                                      : model.capture.output;
  problem.gamma = removed.empty() ? 1.0 : GammaFactor(g, removed);

  problem.sources.resize(n);
  if (config.hop_radius == kUnboundedHops) {
    if (!removed.empty()) {
      for (auto& s : problem.sources) s = removed;
    }
  } else {
    for (NodeId j : removed) {
      for (NodeId i : NodesWithinHops(g, j, config.hop_radius)) {
        problem.sources[i].push_back(j);
      }
    }
  }

  problem.retained.assign(n, true);
  for (NodeId j : removed) problem.retained[j] = false;
  std::vector<NodeId> survivors;
  for (std::size_t i = 0; i < n; ++i) {
    if (problem.retained[i]) survivors.push_back(static_cast<NodeId>(i));
  }
  problem.local_set = TopDegree(g, std::move(survivors), config.local_top_frac);
  problem.ascent_set = removed;
  FillInteractionTargets(g, problem.inter_plus ? AllNodes(n) : removed, problem);
  return problem;
}

UnlearningProblem PrepareEdgeUnlearning(const TrainedModel& model, const Graph& g,
                                        const UnlearnRequest& request,
                                        const RectifierConfig& config) {
  ValidateRectifierConfig(config);
  if (request.kind != RequestKind::kEdges) {
    throw InvalidRequestError("PrepareEdgeUnlearning: request is not an edge request");
  }
  RequireCapture(model, g, "PrepareEdgeUnlearning");
  RequireBeta(request.beta, "PrepareEdgeUnlearning");
  const std::size_t n = g.num_nodes();

  UnlearningProblem problem;
  problem.kind = RequestKind::kEdges;
  problem.hidden = model.capture.hidden;
  problem.labels = g.labels();
  problem.beta = request.beta;
  problem.sources.resize(n);
  for (const Edge& e : request.edges) {
    if (e.u >= n || e.v >= n || !g.HasEdge(e.u, e.v)) {
      throw InvalidRequestError("PrepareEdgeUnlearning: edge (" + std::to_string(e.u) +
                                "," + std::to_string(e.v) + ") is not in the graph");
    }
    problem.sources[e.u].push_back(e.v);
    problem.sources[e.v].push_back(e.u);
    problem.removed.push_back(e.u);
    problem.removed.push_back(e.v);
  }
  for (auto& s : problem.sources) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InvalidRequestError("PrepareEdgeUnlearning: duplicate edge in request");
    }
  }
  std::sort(problem.removed.begin(), problem.removed.end());
  problem.removed.erase(std::unique(problem.removed.begin(), problem.removed.end()),
                        problem.removed.end());

  problem.high_ratio = config.high_ratio_mode.value_or(request.beta > kHighRatioThreshold);
  problem.inter_plus =
      config.inter_plus_mode.value_or(problem.removed.size() < kInterPlusThreshold);
  problem.anchor = problem.high_ratio
                       ? Forward(model, RemoveEdges(g, request.edges)).logits
                       : model.capture.output;
  problem.gamma = problem.removed.empty() ? 1.0 : GammaFactor(g, problem.removed);

  problem.retained.assign(n, true);
  std::vector<bool> affected(n, false);
  for (NodeId v : problem.removed) affected[v] = true;
  std::vector<NodeId> unaffected;
  for (std::size_t i = 0; i < n; ++i) {
    if (!affected[i]) unaffected.push_back(static_cast<NodeId>(i));
  }
  problem.local_set = TopDegree(g, std::move(unaffected), config.local_top_frac);
  FillInteractionTargets(g, problem.inter_plus ? AllNodes(n) : problem.removed, problem);
  return problem;
}

LossBreakdown EvaluateLosses(const Rectifier& rectifier, const UnlearningProblem& problem,
                             RectifierGradients* grads) {
  const std::size_t dp = rectifier.hidden_dim();
  const std::size_t c = rectifier.output_dim();
  if (problem.hidden.cols() != dp || problem.anchor.cols() != c ||
      problem.anchor.rows() != problem.hidden.rows()) {
    throw ShapeError("EvaluateLosses: problem embeddings do not match the rectifier");
  }
  if (problem.inter_targets.empty()) {
    throw InvalidRequestError("EvaluateLosses: every interaction target is isolated");
  }
  if (problem.local_set.empty()) {
    throw InvalidRequestError("EvaluateLosses: no retained nodes for the local loss");
  }
  const double beta = rectifier.beta();
  const double gamma = rectifier.gamma();
  const bool record = grads != nullptr;

  PairList pairs;
  std::vector<std::size_t> pair_target;
  for (std::size_t t = 0; t < problem.inter_targets.size(); ++t) {
    for (NodeId i : problem.inter_neighbors[t]) {
      pairs.Add(problem.inter_targets[t], i);
      pair_target.push_back(t);
    }
  }
  const std::size_t n_inter = pairs.size();
  std::vector<NodeId> tilde_nodes = problem.local_set;
  tilde_nodes.insert(tilde_nodes.end(), problem.ascent_set.begin(), problem.ascent_set.end());
  std::vector<std::size_t> pair_owner;
  for (std::size_t k = 0; k < tilde_nodes.size(); ++k) {
    for (NodeId j : problem.sources[tilde_nodes[k]]) {
      pairs.Add(j, tilde_nodes[k]);
      pair_owner.push_back(k);
    }
  }

  const InteractionForward fwd =
      ForwardInteraction(rectifier.interaction(), problem.hidden, pairs, record);
  const Matrix& f1 = fwd.output;

  // Interaction loss on the reconstructed hidden embeddings.
  Matrix f1_inter(n_inter, c);
  std::copy(f1.data().begin(), f1.data().begin() + static_cast<std::ptrdiff_t>(n_inter * c),
            f1_inter.data().begin());
  MlpTape tape2;
  const Matrix f2 = rectifier.reconstruction().Forward(f1_inter, record ? &tape2 : nullptr);
  const Matrix& hm = rectifier.op().h();
  const Matrix& hp = rectifier.op().h_pinv();
  const bool rnd = rectifier.config().use_range_null;
  const Matrix recon =
      rnd ? MatMulTransB(f1_inter, hp) + f2 - MatMulTransB(MatMulTransB(f2, hm), hp) : f2;

  const std::size_t n_targets = problem.inter_targets.size();
  Matrix summed(n_targets, dp);
  for (std::size_t r = 0; r < n_inter; ++r) {
    auto dst = summed.row(pair_target[r]);
    const auto src = recon.row(r);
    for (std::size_t k = 0; k < dp; ++k) dst[k] += src[k];
  }
  LossBreakdown loss;
  Matrix d_summed(n_targets, dp);
  const double inter_scale = 1.0 / static_cast<double>(n_targets);
  for (std::size_t t = 0; t < n_targets; ++t) {
    const std::vector<double> p = SoftmaxNorm(problem.hidden.row(problem.inter_targets[t]));
    const std::vector<double> q = SoftmaxNorm(summed.row(t));
    loss.inter += KlDivergence(p, q);
    if (record) {
      const std::vector<double> g = KlDivergenceLogitGrad(p, q);
      auto dst = d_summed.row(t);
      for (std::size_t k = 0; k < dp; ++k) dst[k] = beta * inter_scale * g[k];
    }
  }
  loss.inter *= inter_scale;

  // Local and ascent terms on the corrected output embeddings.
  Matrix tilde(tilde_nodes.size(), c);
  for (std::size_t k = 0; k < tilde_nodes.size(); ++k) {
    const auto a = problem.anchor.row(tilde_nodes[k]);
    std::copy(a.begin(), a.end(), tilde.row(k).begin());
  }
  Matrix correction(tilde_nodes.size(), c);
  for (std::size_t r = 0; r < pair_owner.size(); ++r) {
    auto dst = correction.row(pair_owner[r]);
    const auto src = f1.row(n_inter + r);
    for (std::size_t k = 0; k < c; ++k) dst[k] += src[k];
  }
  for (std::size_t i = 0; i < tilde.size(); ++i) {
    tilde.data()[i] -= gamma * correction.data()[i];
  }
  Matrix d_tilde(tilde_nodes.size(), c);
  const std::size_t n_local = problem.local_set.size();
  const double chance_ce = std::log(static_cast<double>(c));
  for (std::size_t k = 0; k < tilde_nodes.size(); ++k) {
    const NodeId node = tilde_nodes[k];
    if (k < n_local) {
      const std::vector<double> p = SoftmaxNorm(problem.anchor.row(node));
      const std::vector<double> q = SoftmaxNorm(tilde.row(k));
      loss.local += KlDivergence(p, q);
      if (record) {
        const std::vector<double> g = KlDivergenceLogitGrad(p, q);
        auto dst = d_tilde.row(k);
        for (std::size_t m = 0; m < c; ++m) dst[m] = (1.0 - beta) * g[m];
      }
    } else {
      const auto label = static_cast<std::size_t>(problem.labels[node]);
      const double ce = CrossEntropy(tilde.row(k), label);
      const bool saturated = rectifier.config().bounded_ascent && ce >= chance_ce;
      loss.plus -= saturated ? chance_ce : ce;
      if (record && !saturated) {
        const std::vector<double> g = CrossEntropyGrad(tilde.row(k), label);
        auto dst = d_tilde.row(k);
        for (std::size_t m = 0; m < c; ++m) dst[m] = -beta * g[m];
      }
    }
  }
  loss.total = CombineLosses(beta, loss.plus, loss.inter, loss.local);
  if (!record) return loss;

  Matrix d_recon(n_inter, dp);
  for (std::size_t r = 0; r < n_inter; ++r) {
    const auto src = d_summed.row(pair_target[r]);
    std::copy(src.begin(), src.end(), d_recon.row(r).begin());
  }
  Matrix d_f1_inter(n_inter, c);
  Matrix d_f2 = d_recon;
  if (rnd) {
    d_f1_inter = MatMul(d_recon, hp);
    d_f2 -= MatMul(d_f1_inter, hm);
  }
  grads->reconstruction = rectifier.reconstruction().Backward(tape2, d_f2);
  d_f1_inter += grads->reconstruction.input;

  Matrix d_f1(pairs.size(), c);
  std::copy(d_f1_inter.data().begin(), d_f1_inter.data().end(), d_f1.data().begin());
  for (std::size_t r = 0; r < pair_owner.size(); ++r) {
    const auto src = d_tilde.row(pair_owner[r]);
    auto dst = d_f1.row(n_inter + r);
    for (std::size_t k = 0; k < c; ++k) dst[k] = -gamma * src[k];
  }
  grads->interaction =
      BackwardInteraction(rectifier.interaction(), problem.hidden, pairs, fwd, d_f1);
  return loss;
}

double LossInter(const Rectifier& rectifier, const UnlearningProblem& problem) {
  return EvaluateLosses(rectifier, problem).inter;
}

double LossLocal(const Rectifier& rectifier, const UnlearningProblem& problem) {
  return EvaluateLosses(rectifier, problem).local;
}

double LossPlus(const Rectifier& rectifier, const UnlearningProblem& problem) {
  return EvaluateLosses(rectifier, problem).plus;
}

RectifierTraining TrainRectifier(const UnlearningProblem& problem, DegenerateOperator op,
                                 const RectifierConfig& config) {
  if (op.input_dim() != problem.hidden.cols() || op.output_dim() != problem.anchor.cols()) {
    throw ShapeError("TrainRectifier: operator does not match the problem embeddings");
  }
  RectifierConfig resolved = config;
  resolved.high_ratio_mode = problem.high_ratio;
  resolved.inter_plus_mode = problem.inter_plus;
  const auto start = std::chrono::steady_clock::now();
  RectifierTraining out{
      Rectifier::Initialize(std::move(op), problem.gamma, problem.beta, resolved), {}, 0.0};
  if (!problem.removed.empty()) {
    AdamOptimizer optimizer(AdamOptions{.learning_rate = config.learning_rate});
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
      RectifierGradients grads;
      const LossBreakdown loss = EvaluateLosses(out.rectifier, problem, &grads);
      if (!std::isfinite(loss.total)) {
        throw NumericalError("TrainRectifier: non-finite loss at epoch " +
                             std::to_string(epoch));
      }
      out.history.push_back(loss);
      std::vector<std::span<const double>> grad_views = GradientViews(grads.interaction);
      for (auto v : GradientViews(grads.reconstruction)) grad_views.push_back(v);
      optimizer.Step(out.rectifier.ParameterViews(), grad_views);
    }
  }
  out.train_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<double> UnlearnedEmbedding(const Rectifier& rectifier,
                                       const UnlearningProblem& problem, NodeId i) {
  if (i >= problem.num_nodes()) {
    throw IndexError("UnlearnedEmbedding: node " + std::to_string(i) + " out of range");
  }
  const auto anchor = problem.anchor.row(i);
  std::vector<double> out(anchor.begin(), anchor.end());
  std::vector<double> correction(out.size(), 0.0);
  for (NodeId j : problem.sources[i]) {
    const std::vector<double> f = rectifier.Interact(problem.hidden.row(j), problem.hidden.row(i));
    for (std::size_t k = 0; k < out.size(); ++k) correction[k] += f[k];
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= rectifier.gamma() * correction[k];
  return out;
}

UnlearnedEmbeddings UnlearnNodes(const Rectifier& rectifier, const UnlearningProblem& problem) {
  const std::size_t n = problem.num_nodes();
  const std::size_t c = rectifier.output_dim();
  if (problem.anchor.cols() != c || problem.hidden.cols() != rectifier.hidden_dim()) {
    throw ShapeError("UnlearnNodes: problem embeddings do not match the rectifier");
  }
  PairList pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (NodeId j : problem.sources[i]) pairs.Add(j, static_cast<NodeId>(i));
  }
  UnlearnedEmbeddings out;
  out.h_tilde = problem.anchor;
  if (pairs.size() > 0) {
    const InteractionForward fwd =
        ForwardInteraction(rectifier.interaction(), problem.hidden, pairs, false);
    Matrix correction(n, c);
    for (std::size_t r = 0; r < pairs.size(); ++r) {
      auto dst = correction.row(pairs.dst[r]);
      const auto src = fwd.output.row(r);
      for (std::size_t k = 0; k < c; ++k) dst[k] += src[k];
    }
    for (std::size_t i = 0; i < out.h_tilde.size(); ++i) {
      out.h_tilde.data()[i] -= rectifier.gamma() * correction.data()[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (problem.retained[i]) out.retained_ids.push_back(static_cast<NodeId>(i));
  }
  out.retained_view = GatherRows(out.h_tilde, std::span<const NodeId>(out.retained_ids));
  return out;
}

UnlearnedEmbeddings HighRatioUnlearn(const TrainedModel& model, const Graph& g,
                                     const UnlearnRequest& request,
                                     const Rectifier& rectifier) {
  RectifierConfig config = rectifier.config();
  config.high_ratio_mode = true;
  return UnlearnNodes(rectifier, PrepareNodeUnlearning(model, g, request, config));
}

UnlearnedEmbeddings EdgeUnlearn(const Rectifier& rectifier, const UnlearningProblem& problem) {
  if (problem.kind != RequestKind::kEdges) {
    throw InvalidRequestError("EdgeUnlearn: problem is not an edge problem");
  }
  return UnlearnNodes(rectifier, problem);
}

}  // namespace nodeunlearn
