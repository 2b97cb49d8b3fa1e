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

#include "nodeunlearn/experiment_config.h"

#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <set>

#include "nodeunlearn/checkpoint.h"
#include "nodeunlearn/dataset_io.h"
#include "nodeunlearn/error.h"

namespace nodeunlearn {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseNumber(std::string_view v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ParseError("malformed number '" + std::string(v) + "'");
  }
  return out;
}

bool ParseBool(std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ParseError("expected true or false, got '" + std::string(v) + "'");
}

std::optional<bool> ParseTriState(std::string_view v) {
  if (v == "auto") return std::nullopt;
  return ParseBool(v);
}

std::string FormatTriState(const std::optional<bool>& v) {
  if (!v) return "auto";
  return *v ? "true" : "false";
}

std::string FormatBool(bool v) { return v ? "true" : "false"; }

// "0,1,2" or "0..9" (inclusive) or a mix of both.
std::vector<std::uint64_t> ParseSeeds(std::string_view v) {
  std::vector<std::uint64_t> seeds;
  while (!v.empty()) {
    const auto comma = v.find(',');
    const std::string_view item = Trim(v.substr(0, comma));
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      seeds.push_back(ParseNumber<std::uint64_t>(item));
    } else {
      const auto lo = ParseNumber<std::uint64_t>(Trim(item.substr(0, dots)));
      const auto hi = ParseNumber<std::uint64_t>(Trim(item.substr(dots + 2)));
      if (hi < lo || hi - lo > 100000) throw ParseError("bad seed range '" + std::string(item) + "'");
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    }
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  if (seeds.empty()) throw ParseError("empty seed list");
  return seeds;
}

std::string FormatSeeds(const std::vector<std::uint64_t>& seeds) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(seeds[i]);
  }
  return out;
}

struct Field {
  const char* key;
  std::function<void(ExperimentConfig&, std::string_view)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

#define NU_DOUBLE(name, member)                                                   \
  Field {                                                                         \
    name, [](ExperimentConfig& c, std::string_view v) { c.member = ParseNumber<double>(v); }, \
        [](const ExperimentConfig& c) { return FormatDouble(c.member); }          \
  }
#define NU_SIZE(name, member)                                                     \
  Field {                                                                         \
    name,                                                                         \
        [](ExperimentConfig& c, std::string_view v) { c.member = ParseNumber<std::size_t>(v); }, \
        [](const ExperimentConfig& c) { return std::to_string(c.member); }        \
  }
#define NU_INT(name, member)                                                      \
  Field {                                                                         \
    name, [](ExperimentConfig& c, std::string_view v) { c.member = ParseNumber<int>(v); }, \
        [](const ExperimentConfig& c) { return std::to_string(c.member); }        \
  }
#define NU_BOOL(name, member)                                                     \
  Field {                                                                         \
    name, [](ExperimentConfig& c, std::string_view v) { c.member = ParseBool(v); }, \
        [](const ExperimentConfig& c) { return FormatBool(c.member); }            \
  }

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = {
      {"dataset", [](ExperimentConfig& c, std::string_view v) { c.dataset = std::string(v); },
       [](const ExperimentConfig& c) { return c.dataset; }},
      NU_SIZE("synth.blocks", synth.blocks),
      NU_SIZE("synth.per_block", synth.per_block),
      NU_DOUBLE("synth.p_in", synth.p_in),
      NU_DOUBLE("synth.p_out", synth.p_out),
      NU_SIZE("synth.feature_dim", synth.feature_dim),
      NU_DOUBLE("synth.noise_std", synth.noise_std),
      NU_DOUBLE("synth.signal", synth.signal),
      NU_DOUBLE("synth.train_frac", synth.train_frac),
      {"synth.seed",
       [](ExperimentConfig& c, std::string_view v) { c.synth.seed = ParseNumber<std::uint64_t>(v); },
       [](const ExperimentConfig& c) { return std::to_string(c.synth.seed); }},
      {"backbone",
       [](ExperimentConfig& c, std::string_view v) { c.backbone = ParseBackbone(v); },
       [](const ExperimentConfig& c) { return std::string(BackboneName(c.backbone)); }},
      NU_SIZE("backbone.hidden_dim", hyper.hidden_dim),
      NU_INT("backbone.k_hops", hyper.k_hops),
      NU_DOUBLE("backbone.lr", hyper.learning_rate),
      NU_DOUBLE("backbone.weight_decay", hyper.weight_decay),
      NU_INT("backbone.epochs", hyper.epochs),
      {"unlearn.kind",
       [](ExperimentConfig& c, std::string_view v) {
         if (v == "nodes") {
           c.unlearn_kind = RequestKind::kNodes;
         } else if (v == "edges") {
           c.unlearn_kind = RequestKind::kEdges;
         } else {
           throw ParseError("expected nodes or edges, got '" + std::string(v) + "'");
         }
       },
       [](const ExperimentConfig& c) {
         return std::string(c.unlearn_kind == RequestKind::kNodes ? "nodes" : "edges");
       }},
      NU_DOUBLE("unlearn.ratio", ratio),
      NU_SIZE("rectifier.mlp_hidden", rectifier.mlp_hidden),
      NU_INT("rectifier.epochs", rectifier.epochs),
      NU_DOUBLE("rectifier.lr", rectifier.learning_rate),
      NU_DOUBLE("rectifier.local_top_frac", rectifier.local_top_frac),
      {"rectifier.hop_radius",
       [](ExperimentConfig& c, std::string_view v) {
         c.rectifier.hop_radius = v == "inf" ? kUnboundedHops : ParseNumber<int>(v);
       },
       [](const ExperimentConfig& c) {
         return c.rectifier.hop_radius == kUnboundedHops ? std::string("inf")
                                                          : std::to_string(c.rectifier.hop_radius);
       }},
      {"rectifier.high_ratio",
       [](ExperimentConfig& c, std::string_view v) { c.rectifier.high_ratio_mode = ParseTriState(v); },
       [](const ExperimentConfig& c) { return FormatTriState(c.rectifier.high_ratio_mode); }},
      {"rectifier.inter_plus",
       [](ExperimentConfig& c, std::string_view v) { c.rectifier.inter_plus_mode = ParseTriState(v); },
       [](const ExperimentConfig& c) { return FormatTriState(c.rectifier.inter_plus_mode); }},
      NU_BOOL("rectifier.use_range_null", rectifier.use_range_null),
      NU_BOOL("rectifier.bounded_ascent", rectifier.bounded_ascent),
      {"rectifier.activation",
       [](ExperimentConfig& c, std::string_view v) { c.rectifier.activation = ParseActivation(v); },
       [](const ExperimentConfig& c) { return std::string(ActivationName(c.rectifier.activation)); }},
      NU_BOOL("eval.retrain", eval_retrain),
      NU_BOOL("eval.mia", eval_mia),
      NU_BOOL("eval.kde", eval_kde),
      NU_BOOL("eval.efficacy", eval_efficacy),
      NU_DOUBLE("eval.kde_bandwidth", kde_bandwidth),
      NU_SIZE("eval.kde_grid", kde_grid),
      NU_DOUBLE("eval.poison_frac", poison_frac),
      NU_BOOL("output.checkpoints", save_checkpoints),
      {"seeds", [](ExperimentConfig& c, std::string_view v) { c.seeds = ParseSeeds(v); },
       [](const ExperimentConfig& c) { return FormatSeeds(c.seeds); }},
      {"out", [](ExperimentConfig& c, std::string_view v) { c.out = std::string(v); },
       [](const ExperimentConfig& c) { return c.out; }},
  };
  return fields;
}

#undef NU_DOUBLE
#undef NU_SIZE
#undef NU_INT
#undef NU_BOOL

const Field& FindField(std::string_view key) {
  for (const Field& f : Fields()) {
    if (key == f.key) return f;
  }
  throw ParseError("unknown key '" + std::string(key) + "'");
}

}  // namespace

void ApplyOverride(ExperimentConfig& config, std::string_view key, std::string_view value) {
  const Field& field = FindField(Trim(key));
  try {
    field.set(config, Trim(value));
  } catch (const InvalidRequestError& e) {
    throw ParseError(std::string(field.key) + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(std::string(field.key) + ": " + e.what());
  }
}

ExperimentConfig ParseExperimentConfig(std::string_view text, const std::string& origin) {
  ExperimentConfig config;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(where + ": expected key = value");
    const std::string_view key = Trim(line.substr(0, eq));
    if (!seen.insert(std::string(key)).second) {
      throw ParseError(where + ": repeated key '" + std::string(key) + "'");
    }
    try {
      ApplyOverride(config, key, line.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  return ParseExperimentConfig(ReadTextFile(path), path.string());
}

void ValidateExperimentConfig(const ExperimentConfig& config) {
  if (config.dataset.empty()) throw InvalidRequestError("config: dataset is empty");
  if (!(config.ratio > 0.0 && config.ratio < 1.0)) {
    throw InvalidRequestError("config: unlearn.ratio must be in (0,1); an empty unlearning "
                              "set is not a valid experiment");
  }
  if (config.dataset == kSyntheticDataset) {
    const SbmOptions& s = config.synth;
    if (s.blocks < 1 || s.per_block < 1 || s.feature_dim < 1) {
      throw InvalidRequestError("config: synth sizes must be >= 1");
    }
    if (!(s.p_out >= 0.0 && s.p_out < s.p_in && s.p_in <= 1.0)) {
      throw InvalidRequestError("config: require 0 <= synth.p_out < synth.p_in <= 1");
    }
    if (!(s.train_frac > 0.0 && s.train_frac < 1.0)) {
      throw InvalidRequestError("config: synth.train_frac must be in (0,1)");
    }
    if (config.unlearn_kind == RequestKind::kNodes) {
      const auto n = static_cast<double>(s.blocks * s.per_block);
      const double train = std::floor(s.train_frac * n);
      if (std::llround(config.ratio * train) < 1) {
        throw InvalidRequestError("config: unlearn.ratio selects no training node");
      }
    }
  }
  if (config.backbone == BackboneKind::kGcn && config.hyper.hidden_dim < 1) {
    throw InvalidRequestError("config: backbone.hidden_dim must be >= 1");
  }
  if (config.hyper.k_hops < 1) throw InvalidRequestError("config: backbone.k_hops must be >= 1");
  if (config.hyper.epochs < 0) throw InvalidRequestError("config: backbone.epochs must be >= 0");
  if (!(config.hyper.learning_rate > 0.0)) {
    throw InvalidRequestError("config: backbone.lr must be positive");
  }
  if (!(config.hyper.weight_decay >= 0.0)) {
    throw InvalidRequestError("config: backbone.weight_decay must be >= 0");
  }
  ValidateRectifierConfig(config.rectifier);
  if (!(config.kde_bandwidth > 0.0)) {
    throw InvalidRequestError("config: eval.kde_bandwidth must be positive");
  }
  if (config.kde_grid < 2) throw InvalidRequestError("config: eval.kde_grid must be >= 2");
  if (!(config.poison_frac > 0.0 && config.poison_frac < 0.5)) {
    throw InvalidRequestError("config: eval.poison_frac must be in (0,0.5)");
  }
  if (config.seeds.empty()) throw InvalidRequestError("config: no seeds");
  if (config.out.empty()) throw InvalidRequestError("config: out is empty");
}

std::vector<std::pair<std::string, std::string>> ConfigEntries(const ExperimentConfig& config) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Field& f : Fields()) out.emplace_back(f.key, f.get(config));
  return out;
}

std::string FormatExperimentConfig(const ExperimentConfig& config) {
  std::string text;
  for (const auto& [key, value] : ConfigEntries(config)) {
    text += key;
    text += " = ";
    text += value;
    text += '\n';
  }
  return text;
}

}  // namespace nodeunlearn
