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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nodeunlearn/error.h"
#include "nodeunlearn/experiment.h"
#include "nodeunlearn/experiment_config.h"

namespace {

struct Command {
  const char* name;
  const char* help;
};

constexpr Command kCommands[] = {
    {"gen-synth", "write the configured SBM as a dataset directory"},
    {"train", "train the backbone per seed"},
    {"unlearn", "train the rectifier and apply it"},
    {"retrain", "retrain on the reduced graph"},
    {"eval", "unlearn, retrain and compare F1 and runtime"},
    {"attack", "membership-inference AUC of the unlearned output"},
    {"efficacy", "poison labels, unlearn them and report the F1 change"},
    {"kde", "polar KDE grids and distances to the retrained model"},
    {"pipeline", "every enabled stage"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph node unlearning experiments"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out;
  double ratio = 0.0;
  std::string backbone;
  std::vector<std::string> sets;

  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "flat key = value config file");
    sub->add_option("--seed", seed, "run a single seed");
    sub->add_option("--out", out, "output directory");
    sub->add_option("--ratio", ratio, "unlearning ratio");
    sub->add_option("--backbone", backbone, "gcn or sgc")
        ->check(CLI::IsMember({"gcn", "sgc"}));
    sub->add_option("--set", sets, "override a config key: key=value");
  }
  CLI11_PARSE(app, argc, argv);

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  nodeunlearn::ExperimentConfig config;
  try {
    if (!config_path.empty()) config = nodeunlearn::LoadExperimentConfig(config_path);
    for (const std::string& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) {
        throw nodeunlearn::ParseError("--set expects key=value, got '" + s + "'");
      }
      nodeunlearn::ApplyOverride(config, s.substr(0, eq), s.substr(eq + 1));
    }
    if (sub->count("--seed") > 0) config.seeds = {seed};
    if (sub->count("--out") > 0) config.out = out;
    if (sub->count("--ratio") > 0) config.ratio = ratio;
    if (sub->count("--backbone") > 0) config.backbone = nodeunlearn::ParseBackbone(backbone);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return nodeunlearn::ExecuteCommand(command, config, std::cerr);
}
