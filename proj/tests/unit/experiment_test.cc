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

#include <cmath>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "nodeunlearn/checkpoint.h"
#include "nodeunlearn/dataset_io.h"
#include "nodeunlearn/error.h"
#include "nodeunlearn/parallel.h"
#include "nodeunlearn/synthetic.h"
#include "test_support.h"

namespace nodeunlearn {
namespace {

using testing::TempDir;

ExperimentConfig SmokeConfig(const TempDir& dir) {
  ExperimentConfig c;
  c.synth.blocks = 3;
  c.synth.per_block = 40;
  c.synth.p_in = 0.15;
  c.synth.p_out = 0.01;
  c.synth.feature_dim = 8;
  c.rectifier.epochs = 40;
  c.eval_kde = true;
  c.kde_grid = 30;
  c.seeds = {0, 1};
  c.out = (dir.path() / "out").string();
  return c;
}

// Everything in the report except wall-clock fields.
nlohmann::json WithoutTimes(nlohmann::json j) {
  for (const char* key : {"rt_train", "rt_unlearn", "rt_retrain"}) j.erase(key);
  for (auto& run : j.at("runs")) {
    for (const char* key : {"rt_train", "rt_unlearn", "rt_retrain"}) run.erase(key);
  }
  return j;
}

TEST(RunCommandTest, PipelineWritesArtifacts) {
  TempDir dir;
  const ExperimentConfig c = SmokeConfig(dir);
  const EvalReport report = RunCommand("pipeline", c);
  ASSERT_EQ(report.runs.size(), 2u);
  const std::filesystem::path out = c.out;
  EXPECT_TRUE(std::filesystem::exists(out / "report.json"));
  EXPECT_TRUE(std::filesystem::exists(out / "config.resolved"));
  EXPECT_FALSE(std::filesystem::exists(out / "FAILED"));
  for (const char* f : {"model.json", "capture.bin", "rectifier.json", "unlearned.bin",
                        "retrain_model.json", "kde_original.csv", "kde_unlearned.csv",
                        "kde_retrain.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(out / "seed_0" / f)) << f;
  }
  const auto j = nlohmann::json::parse(ReadTextFile(out / "report.json"));
  EXPECT_EQ(j.at("command"), "pipeline");
  EXPECT_EQ(j.at("f1_unlearned").at("count"), 2);
  const double auc = j.at("mia_auc_ours").at("mean").get<double>();
  EXPECT_GE(auc, 0.0);
  EXPECT_LE(auc, 1.0);
  EXPECT_TRUE(j.contains("config"));

  // the resolved config reproduces the run
  const ExperimentConfig again = LoadExperimentConfig(out / "config.resolved");
  EXPECT_EQ(FormatExperimentConfig(again), FormatExperimentConfig(c));
}

TEST(RunCommandTest, RerunIsNumericallyIdentical) {
  TempDir a, b;
  ExperimentConfig ca = SmokeConfig(a);
  ExperimentConfig cb = SmokeConfig(b);
  RunCommand("eval", ca);
  RunCommand("eval", cb);
  const auto ja = nlohmann::json::parse(ReadTextFile(std::filesystem::path(ca.out) / "report.json"));
  const auto jb = nlohmann::json::parse(ReadTextFile(std::filesystem::path(cb.out) / "report.json"));
  auto strip_out = [](nlohmann::json j) {
    j.at("config").erase("out");
    return j;
  };
  EXPECT_EQ(strip_out(WithoutTimes(ja)), strip_out(WithoutTimes(jb)));
  EXPECT_EQ(ReadTextFile(std::filesystem::path(ca.out) / "seed_1" / "rectifier.json"),
            ReadTextFile(std::filesystem::path(cb.out) / "seed_1" / "rectifier.json"));
}

TEST(RunCommandTest, FailureLeavesMarker) {
  TempDir dir;
  ExperimentConfig c = SmokeConfig(dir);
  c.dataset = (dir.path() / "no_such_dataset").string();
  std::ostringstream log;
  EXPECT_EQ(ExecuteCommand("train", c, log), 1);
  EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(c.out) / "FAILED"));
  EXPECT_NE(log.str().find("error:"), std::string::npos);

  c = SmokeConfig(dir);
  EXPECT_EQ(ExecuteCommand("train", c, log), 0);
  EXPECT_FALSE(std::filesystem::exists(std::filesystem::path(c.out) / "FAILED"));
}

TEST(RunCommandTest, EmptyUnlearningSetRejectedBeforeCompute) {
  TempDir dir;
  ExperimentConfig c = SmokeConfig(dir);
  c.ratio = 0.001;
  EXPECT_THROW(RunCommand("pipeline", c), InvalidRequestError);
  EXPECT_FALSE(std::filesystem::exists(std::filesystem::path(c.out) / "report.json"));
  EXPECT_THROW(RunCommand("frobnicate", SmokeConfig(dir)), InvalidRequestError);
}

TEST(RunCommandTest, GenSynthWritesLoadableDataset) {
  TempDir dir;
  const ExperimentConfig c = SmokeConfig(dir);
  RunCommand("gen-synth", c);
  const Dataset d = LoadDataset(std::filesystem::path(c.out) / "dataset");
  EXPECT_EQ(d.graph.num_nodes(), 120u);
  EXPECT_EQ(d.graph.edges(), GenerateSbm(c.synth).graph.edges());
}

TEST(EfficacyTest, ZeroRectifierEpochsGivesZeroDelta) {
  const Dataset data = GenerateSbm(SbmOptions{});
  RectifierConfig r;
  r.epochs = 0;
  const std::uint64_t seeds[] = {0, 1};
  const EfficacyResult e =
      RunEfficacy(data, BackboneKind::kGcn, BackboneHyper{}, r, 0.1, seeds);
  EXPECT_EQ(e.mean_delta, 0.0);
  EXPECT_EQ(e.positive_runs, 0u);
  EXPECT_THROW(RunEfficacy(data, BackboneKind::kGcn, BackboneHyper{}, r, 0.5, seeds),
               InvalidRequestError);
}

TEST(EfficacyTest, TinyPoisonChangesLittle) {
  const Dataset data = GenerateSbm(SbmOptions{});
  const std::uint64_t seeds[] = {0, 1, 2};
  const EfficacyResult e =
      RunEfficacy(data, BackboneKind::kGcn, BackboneHyper{}, RectifierConfig{}, 0.005, seeds);
  EXPECT_LT(std::abs(e.mean_delta), 0.02);
}

TEST(EfficacyTest, NoisySbmImprovesInMostSeeds) {
  SbmOptions o;
  o.noise_std = 2.5;
  const Dataset data = GenerateSbm(o);
  std::vector<std::uint64_t> seeds(10);
  std::iota(seeds.begin(), seeds.end(), 0);
  const EfficacyResult e = RunEfficacy(data, BackboneKind::kGcn, BackboneHyper{},
                                       RectifierConfig{}, 0.3, seeds, ThreadBudget());
  EXPECT_GE(e.positive_runs, 8u);
  EXPECT_GT(e.mean_delta, 0.0);
}

TEST(EdgeUnlearningTest, DeskScaleF1TracksEdgeRetrain) {
  ExperimentConfig c;
  c.unlearn_kind = RequestKind::kEdges;
  const Dataset data = LoadExperimentData(c);
  double gap = 0.0;
  for (std::uint64_t seed : {0, 1, 2}) {
    const SeedResult r = RunSeed(c, data, seed, StagePlan{true, true, false, false});
    gap += std::abs(*r.f1_unlearned - *r.f1_retrain);
  }
  EXPECT_LE(gap / 3.0, 0.03);
}

TEST(KdeComparisonTest, UnlearnedCloserToRetrainThanOriginalOnSgc) {
  ExperimentConfig c;
  c.backbone = BackboneKind::kSgc;
  c.ratio = 0.3;
  const Dataset data = LoadExperimentData(c);
  double ours = 0.0, original = 0.0;
  for (std::uint64_t seed : {0, 1, 2}) {
    const SeedResult r = RunSeed(c, data, seed, StagePlan{true, true, false, true});
    ours += r.kde->unlearned_vs_retrain;
    original += r.kde->original_vs_retrain;
  }
  EXPECT_LT(ours, original);
}

TEST(KdeComparisonTest, HighRatioModeBeatsStandardAtFortyPercent) {
  ExperimentConfig c;
  c.ratio = 0.4;
  const Dataset data = LoadExperimentData(c);
  double high = 0.0, standard = 0.0;
  for (std::uint64_t seed : {0, 1, 2}) {
    c.rectifier.high_ratio_mode = true;
    high += RunSeed(c, data, seed, StagePlan{true, true, false, true}).kde->unlearned_vs_retrain;
    c.rectifier.high_ratio_mode = false;
    standard +=
        RunSeed(c, data, seed, StagePlan{true, true, false, true}).kde->unlearned_vs_retrain;
  }
  EXPECT_LT(high, standard);
}

}  // namespace
}  // namespace nodeunlearn
