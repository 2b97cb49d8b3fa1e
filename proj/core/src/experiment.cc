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

#include "nodeunlearn/experiment.h"

#include <array>
#include <string>

#include "nodeunlearn/checkpoint.h"
#include "nodeunlearn/error.h"
#include "nodeunlearn/kde.h"
#include "nodeunlearn/metrics.h"
#include "nodeunlearn/parallel.h"
#include "nodeunlearn/synthetic.h"
#include "nodeunlearn/unlearning.h"

namespace nodeunlearn {
namespace {

constexpr std::array<std::string_view, 9> kCommands = {
    "gen-synth", "train", "unlearn", "retrain", "eval", "attack", "efficacy", "kde", "pipeline"};

UnlearnRequest SampleRequest(const ExperimentConfig& config, const Dataset& data,
                             std::uint64_t seed) {
  if (config.unlearn_kind == RequestKind::kNodes) {
    return SampleUnlearnSet(data.split, config.ratio, seed);
  }
  return SampleUnlearnEdges(data.graph, config.ratio, seed);
}

KdeDistances CompareDistributions(const ExperimentConfig& config, const Matrix& original,
                                  const Matrix& unlearned, const Matrix& retrained,
                                  const Matrix& reference_set,
                                  const std::optional<std::filesystem::path>& dir) {
  const std::vector<double> axis = MeanDirection(reference_set);
  const auto p_orig = EmbedToPolar(original, axis);
  const auto p_ours = EmbedToPolar(unlearned, axis);
  const auto p_retr = EmbedToPolar(retrained, axis);
  std::vector<PolarPoint> all = p_orig;
  all.insert(all.end(), p_ours.begin(), p_ours.end());
  all.insert(all.end(), p_retr.begin(), p_retr.end());
  const KdeAxes axes = DefaultAxes(all, config.kde_bandwidth, config.kde_grid);
  const KdeGrid g_orig = KdePdf(p_orig, config.kde_bandwidth, axes);
  const KdeGrid g_ours = KdePdf(p_ours, config.kde_bandwidth, axes);
  const KdeGrid g_retr = KdePdf(p_retr, config.kde_bandwidth, axes);
  if (dir) {
    WriteKdeCsv(g_orig, *dir / "kde_original.csv");
    WriteKdeCsv(g_ours, *dir / "kde_unlearned.csv");
    WriteKdeCsv(g_retr, *dir / "kde_retrain.csv");
  }
  return KdeDistances{KdeDistance(g_ours, g_retr), KdeDistance(g_orig, g_retr)};
}

}  // namespace

bool IsKnownCommand(std::string_view command) {
  for (std::string_view c : kCommands) {
    if (c == command) return true;
  }
  return false;
}

Dataset LoadExperimentData(const ExperimentConfig& config) {
  if (config.dataset == kSyntheticDataset) return GenerateSbm(config.synth);
  return LoadDataset(config.dataset);
}

SeedResult RunSeed(const ExperimentConfig& config, const Dataset& data, std::uint64_t seed,
                   const StagePlan& plan,
                   const std::optional<std::filesystem::path>& artifact_dir) {
  const Graph& g = data.graph;
  const SplitSpec& split = data.split;
  BackboneHyper hyper = config.hyper;
  hyper.seed = seed;
  RectifierConfig rcfg = config.rectifier;
  rcfg.seed = seed;
  if (artifact_dir) std::filesystem::create_directories(*artifact_dir);
  const bool save = artifact_dir && config.save_checkpoints;

  SeedResult result;
  result.seed = seed;
  const TrainedModel model = TrainModel(g, split, config.backbone, hyper);
  result.rt_train = model.train_seconds;
  result.f1_original = LogitsMicroF1(model.capture.output, g.labels(), split.test);
  if (save) {
    SaveModel(model, *artifact_dir / "model.json");
    SaveCapture(model.capture, *artifact_dir / "capture.bin");
  }
  if (!plan.unlearn && !plan.retrain) return result;

  const UnlearnRequest request = SampleRequest(config, data, seed);
  const bool nodes = request.kind == RequestKind::kNodes;
  result.num_removed = nodes ? request.nodes.size() : request.edges.size();
  result.beta = request.beta;

  std::optional<UnlearnedEmbeddings> unlearned;
  if (plan.unlearn) {
    std::optional<RectifierTraining> training;
    std::optional<UnlearningProblem> problem;
    result.rt_unlearn = RecordRuntime([&] {
      problem = nodes ? PrepareNodeUnlearning(model, g, request, rcfg)
                      : PrepareEdgeUnlearning(model, g, request, rcfg);
      training = TrainRectifier(*problem, ExtractDegenerateOperator(model), rcfg);
      unlearned = UnlearnNodes(training->rectifier, *problem);
    });
    result.gamma = problem->gamma;
    result.high_ratio = problem->high_ratio;
    result.inter_plus = problem->inter_plus;
    if (!training->history.empty()) result.rectifier_final_loss = training->history.back().total;
    result.f1_unlearned = LogitsMicroF1(unlearned->h_tilde, g.labels(), split.test);
    if (save) {
      SaveRectifier(training->rectifier, *artifact_dir / "rectifier.json");
      const Matrix ms[] = {unlearned->h_tilde};
      SaveMatrices(ms, *artifact_dir / "unlearned.bin");
    }
  }

  std::optional<TrainedModel> retrained;
  std::optional<PrunedGraph> pruned;
  if (plan.retrain) {
    SplitSpec retrain_split;
    result.rt_retrain = RecordRuntime([&] {
      if (nodes) {
        pruned = RemoveNodes(g, request.nodes);
        retrain_split = RemapSplit(split, pruned->remap);
        retrained = TrainModel(pruned->graph, retrain_split, config.backbone, hyper);
      } else {
        const Graph reduced = RemoveEdges(g, request.edges);
        retrain_split = split;
        retrained = TrainModel(reduced, retrain_split, config.backbone, hyper);
      }
    });
    const std::vector<int>& labels = nodes ? pruned->graph.labels() : g.labels();
    result.f1_retrain = LogitsMicroF1(retrained->capture.output, labels, retrain_split.test);
    if (save) SaveModel(*retrained, *artifact_dir / "retrain_model.json");
  }

  if (plan.mia && nodes && unlearned) {
    result.mia_auc_ours = MiaAuc(model.capture.output, unlearned->h_tilde, split.train,
                                 request.nodes);
    if (retrained) {
      const Matrix full = Forward(*retrained, g).logits;
      result.mia_auc_retrain = MiaAuc(model.capture.output, full, split.train, request.nodes);
    }
  }

  if (plan.kde && unlearned && retrained) {
    // Compare on retained nodes; the retrained model is indexed by new ids.
    std::vector<NodeId> kept;
    std::vector<NodeId> kept_new;
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      if (nodes && pruned->remap.old_to_new[i] < 0) continue;
      kept.push_back(static_cast<NodeId>(i));
      kept_new.push_back(nodes ? static_cast<NodeId>(pruned->remap.old_to_new[i])
                               : static_cast<NodeId>(i));
    }
    result.kde = CompareDistributions(
        config, GatherRows<NodeId>(model.capture.output, kept), GatherRows<NodeId>(unlearned->h_tilde, kept),
        GatherRows<NodeId>(retrained->capture.output, kept_new), model.capture.output, artifact_dir);
  }
  return result;
}

EfficacyResult RunEfficacy(const Dataset& data, BackboneKind kind, const BackboneHyper& hyper,
                           const RectifierConfig& rectifier, double poison_frac,
                           std::span<const std::uint64_t> seeds, std::size_t threads) {
  if (!(poison_frac > 0.0 && poison_frac < 0.5)) {
    throw InvalidRequestError("RunEfficacy: poison_frac must be in (0,0.5)");
  }
  if (seeds.empty()) throw InvalidRequestError("RunEfficacy: no seeds");
  EfficacyResult result;
  result.runs.resize(seeds.size());
  ParallelFor(seeds.size(), threads, [&](std::size_t k) {
    const std::uint64_t seed = seeds[k];
    const UnlearnRequest poison = SampleUnlearnSet(data.split, poison_frac, seed);
    const Graph poisoned = PoisonLabels(data.graph, poison.nodes);
    BackboneHyper h = hyper;
    h.seed = seed;
    RectifierConfig rcfg = rectifier;
    rcfg.seed = seed;
    const TrainedModel model = TrainModel(poisoned, data.split, kind, h);
    const UnlearningProblem problem = PrepareNodeUnlearning(model, poisoned, poison, rcfg);
    const RectifierTraining training =
        TrainRectifier(problem, ExtractDegenerateOperator(model), rcfg);
    const UnlearnedEmbeddings out = UnlearnNodes(training.rectifier, problem);
    EfficacyRun& run = result.runs[k];
    run.seed = seed;
    run.f1_poisoned = LogitsMicroF1(model.capture.output, data.graph.labels(), data.split.test);
    run.f1_unlearned = LogitsMicroF1(out.h_tilde, data.graph.labels(), data.split.test);
    run.delta = run.f1_unlearned - run.f1_poisoned;
  });
  for (const EfficacyRun& r : result.runs) {
    result.mean_delta += r.delta;
    if (r.delta > 0.0) ++result.positive_runs;
  }
  result.mean_delta /= static_cast<double>(result.runs.size());
  return result;
}

EvalReport RunCommand(std::string_view command, const ExperimentConfig& config) {
  if (!IsKnownCommand(command)) {
    throw InvalidRequestError("unknown command '" + std::string(command) + "'");
  }
  ValidateExperimentConfig(config);
  const std::filesystem::path out = config.out;
  std::filesystem::create_directories(out);
  std::filesystem::remove(out / "FAILED");
  WriteTextFile(out / "config.resolved", FormatExperimentConfig(config));

  EvalReport report;
  report.command = std::string(command);
  report.config = ConfigEntries(config);

  if (command == "gen-synth") {
    if (config.dataset != kSyntheticDataset) {
      throw InvalidRequestError("gen-synth needs dataset = synth");
    }
    const Dataset data = GenerateSbm(config.synth);
    SaveDataset(out / "dataset", data.graph, data.split);
    WriteReport(report, out / "report.json");
    return report;
  }

  const Dataset data = LoadExperimentData(config);
  const std::size_t threads = ThreadBudget();

  StagePlan plan;
  bool efficacy = false;
  bool seeds = true;
  if (command == "train") {
    plan = {false, false, false, false};
  } else if (command == "unlearn") {
    plan = {true, false, false, false};
  } else if (command == "retrain") {
    plan = {false, true, false, false};
  } else if (command == "eval") {
    plan = {true, true, false, false};
  } else if (command == "attack") {
    plan = {true, config.eval_retrain, true, false};
  } else if (command == "kde") {
    plan = {true, true, false, true};
  } else if (command == "efficacy") {
    seeds = false;
    efficacy = true;
  } else {
    plan = {true, config.eval_retrain, config.eval_mia, config.eval_kde};
    efficacy = config.eval_efficacy;
  }

  if (seeds) {
    report.runs.resize(config.seeds.size());
    ParallelFor(config.seeds.size(), threads, [&](std::size_t k) {
      const std::uint64_t seed = config.seeds[k];
      report.runs[k] =
          RunSeed(config, data, seed, plan, out / ("seed_" + std::to_string(seed)));
    });
  }
  if (efficacy) {
    report.efficacy = RunEfficacy(data, config.backbone, config.hyper, config.rectifier,
                                  config.poison_frac, config.seeds, threads);
  }
  WriteReport(report, out / "report.json");
  return report;
}

int ExecuteCommand(std::string_view command, const ExperimentConfig& config, std::ostream& log) {
  try {
    const EvalReport report = RunCommand(command, config);
    log << "wrote " << (std::filesystem::path(config.out) / "report.json").string() << "\n";
    return 0;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    try {
      std::filesystem::create_directories(config.out);
      WriteTextFile(std::filesystem::path(config.out) / "FAILED",
                    std::string(command) + ": " + e.what() + "\n");
    } catch (const std::exception& inner) {
      log << "error: could not write FAILED marker: " << inner.what() << "\n";
    }
    return 1;
  }
}

}  // namespace nodeunlearn
