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

#ifndef NODEUNLEARN_EXPERIMENT_H_
#define NODEUNLEARN_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>

#include "nodeunlearn/backbone.h"
#include "nodeunlearn/dataset_io.h"
#include "nodeunlearn/experiment_config.h"
#include "nodeunlearn/rectifier.h"
#include "nodeunlearn/report.h"

namespace nodeunlearn {

// Generates the SBM or loads the dataset directory named by the config.
Dataset LoadExperimentData(const ExperimentConfig& config);

struct StagePlan {
  bool unlearn = true;
  bool retrain = true;
  bool mia = false;
  bool kde = false;
};

// One seed of train -> sample -> unlearn -> retrain -> evaluate. When
// `artifact_dir` is set, checkpoints and KDE grids are written there.
SeedResult RunSeed(const ExperimentConfig& config, const Dataset& data, std::uint64_t seed,
                   const StagePlan& plan,
                   const std::optional<std::filesystem::path>& artifact_dir = std::nullopt);

// Poison a random fraction of training labels, train on the poisoned graph,
// unlearn exactly the poisoned nodes and compare test F1 before and after.
EfficacyResult RunEfficacy(const Dataset& data, BackboneKind kind, const BackboneHyper& hyper,
                           const RectifierConfig& rectifier, double poison_frac,
                           std::span<const std::uint64_t> seeds, std::size_t threads = 1);

// Subcommands: gen-synth, train, unlearn, retrain, eval, attack, efficacy,
// kde, pipeline. Writes report.json (and artifacts) under config.out.
EvalReport RunCommand(std::string_view command, const ExperimentConfig& config);

// RunCommand with error handling: on failure writes a FAILED marker holding
// the message next to whatever was produced and returns nonzero.
int ExecuteCommand(std::string_view command, const ExperimentConfig& config, std::ostream& log);

bool IsKnownCommand(std::string_view command);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_EXPERIMENT_H_
