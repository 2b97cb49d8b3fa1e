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

#include "nodeunlearn/checkpoint.h"

#include <fstream>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "nodeunlearn/error.h"
#include "nodeunlearn/synthetic.h"
#include "test_support.h"

namespace nodeunlearn {
namespace {

using testing::TempDir;

TrainedModel SmallModel(BackboneKind kind) {
  SbmOptions o;
  o.blocks = 2;
  o.per_block = 8;
  o.p_in = 0.5;
  o.feature_dim = 4;
  const Dataset d = GenerateSbm(o);
  BackboneHyper hyper;
  hyper.epochs = 5;
  hyper.hidden_dim = 3;
  return TrainModel(d.graph, d.split, kind, hyper);
}

TEST(CheckpointTest, ModelRoundTripIsBitExact) {
  for (BackboneKind kind : {BackboneKind::kGcn, BackboneKind::kSgc}) {
    const TrainedModel m = SmallModel(kind);
    TempDir dir;
    SaveModel(m, dir.path() / "model.json");
    const TrainedModel back = LoadModel(dir.path() / "model.json");
    EXPECT_EQ(back.kind, m.kind);
    EXPECT_EQ(back.weights, m.weights);
    EXPECT_EQ(back.hyper.hidden_dim, m.hyper.hidden_dim);
    EXPECT_EQ(back.hyper.k_hops, m.hyper.k_hops);
    EXPECT_EQ(back.hyper.learning_rate, m.hyper.learning_rate);
    EXPECT_EQ(back.hyper.epochs, m.hyper.epochs);

    const auto j = nlohmann::json::parse(ReadTextFile(dir.path() / "model.json"));
    EXPECT_EQ(j.at("version"), 1);
    EXPECT_EQ(j.at("kind"), std::string(BackboneName(kind)));
    EXPECT_EQ(j.at("weights")[0].at("rows"), m.weights[0].rows());
  }
}

TEST(CheckpointTest, CaptureBinaryLayout) {
  const TrainedModel m = SmallModel(BackboneKind::kGcn);
  TempDir dir;
  const auto path = dir.path() / "capture.bin";
  SaveCapture(m.capture, path);
  const Capture back = LoadCapture(path);
  EXPECT_EQ(back.hidden, m.capture.hidden);
  EXPECT_EQ(back.output, m.capture.output);

  const std::string bytes = ReadTextFile(path);
  EXPECT_EQ(bytes.substr(0, 8), "NUCAPv01");
  const std::size_t expected = 8 + 8 + 2 * 16 + 8 * (m.capture.hidden.size() + m.capture.output.size());
  EXPECT_EQ(bytes.size(), expected);

  WriteTextFile(path, bytes + "x");
  EXPECT_THROW(LoadCapture(path), ParseError);
  WriteTextFile(path, bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(LoadCapture(path), ParseError);
  WriteTextFile(path, "NOTMAGIC" + bytes.substr(8));
  EXPECT_THROW(LoadCapture(path), ParseError);
}

TEST(CheckpointTest, RectifierRoundTrip) {
  std::mt19937_64 rng(1);
  const DegenerateOperator op(testing::RandomMatrix(3, 5, rng));
  RectifierConfig config;
  config.mlp_hidden = 4;
  config.hop_radius = kUnboundedHops;
  config.high_ratio_mode = true;
  config.bounded_ascent = false;
  config.activation = Activation::kTanh;
  config.seed = 17;
  const Rectifier r = Rectifier::Initialize(op, 1.25, 0.3, config);
  TempDir dir;
  SaveRectifier(r, dir.path() / "r.json");
  const Rectifier back = LoadRectifier(dir.path() / "r.json");
  EXPECT_EQ(back.gamma(), 1.25);
  EXPECT_EQ(back.beta(), 0.3);
  EXPECT_EQ(back.op().h(), op.h());
  EXPECT_EQ(back.op().h_pinv(), op.h_pinv());
  EXPECT_EQ(back.config().hop_radius, kUnboundedHops);
  EXPECT_EQ(back.config().high_ratio_mode, std::optional<bool>(true));
  EXPECT_EQ(back.config().inter_plus_mode, std::nullopt);
  EXPECT_FALSE(back.config().bounded_ascent);
  EXPECT_EQ(back.config().activation, Activation::kTanh);
  for (std::size_t l = 0; l < 2; ++l) {
    EXPECT_EQ(back.interaction().layers()[l].weight, r.interaction().layers()[l].weight);
    EXPECT_EQ(back.reconstruction().layers()[l].bias, r.reconstruction().layers()[l].bias);
  }
}

TEST(CheckpointTest, MalformedModelNamesFile) {
  TempDir dir;
  WriteTextFile(dir.path() / "bad.json", "{\"version\": 1, \"kind\": \"gcn\"");
  try {
    LoadModel(dir.path() / "bad.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.json"), std::string::npos);
  }
  EXPECT_THROW(LoadModel(dir.path() / "missing.json"), ParseError);
}

}  // namespace
}  // namespace nodeunlearn
