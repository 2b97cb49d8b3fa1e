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

#ifndef NODEUNLEARN_EXPERIMENT_CONFIG_H_
#define NODEUNLEARN_EXPERIMENT_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodeunlearn/backbone.h"
#include "nodeunlearn/graph.h"
#include "nodeunlearn/rectifier.h"
#include "nodeunlearn/synthetic.h"

namespace nodeunlearn {

inline constexpr std::string_view kSyntheticDataset = "synth";

struct ExperimentConfig {
  // "synth" generates an SBM from the synth.* keys; anything else is a
  // dataset directory.
  std::string dataset = std::string(kSyntheticDataset);
  SbmOptions synth;
  BackboneKind backbone = BackboneKind::kGcn;
  BackboneHyper hyper;
  RequestKind unlearn_kind = RequestKind::kNodes;
  double ratio = 0.1;
  RectifierConfig rectifier;
  bool eval_retrain = true;
  bool eval_mia = true;
  bool eval_kde = false;
  bool eval_efficacy = false;
  double kde_bandwidth = 1.0;
  std::size_t kde_grid = 100;
  double poison_frac = 0.1;
  bool save_checkpoints = true;
  std::vector<std::uint64_t> seeds{0};
  std::string out = "out";
};

// Flat "key = value" lines; '#' starts a comment. Unknown or repeated keys
// and malformed values throw ParseError naming origin and line.
ExperimentConfig ParseExperimentConfig(std::string_view text,
                                       const std::string& origin = "<config>");
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

// Sets one key as if it appeared in a config file. Throws ParseError.
void ApplyOverride(ExperimentConfig& config, std::string_view key, std::string_view value);

// Throws InvalidRequestError for inconsistent or out-of-range settings.
void ValidateExperimentConfig(const ExperimentConfig& config);

// Every key with its current value, in canonical order. Feeding the
// formatted text back through ParseExperimentConfig reproduces the config.
std::vector<std::pair<std::string, std::string>> ConfigEntries(const ExperimentConfig& config);
std::string FormatExperimentConfig(const ExperimentConfig& config);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_EXPERIMENT_CONFIG_H_
