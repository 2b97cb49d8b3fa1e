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

#ifndef NODEUNLEARN_REPORT_H_
#define NODEUNLEARN_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nodeunlearn {

struct KdeDistances {
  double unlearned_vs_retrain = 0.0;
  double original_vs_retrain = 0.0;
};

// Measurements of one seed. Optional fields are absent when the stage that
// produces them did not run.
struct SeedResult {
  std::uint64_t seed = 0;
  std::size_t num_removed = 0;
  double beta = 0.0;
  double gamma = 1.0;
  bool high_ratio = false;
  bool inter_plus = false;
  double f1_original = 0.0;
  double rt_train = 0.0;
  std::optional<double> f1_unlearned;
  std::optional<double> rt_unlearn;
  std::optional<double> rectifier_final_loss;
  std::optional<double> f1_retrain;
  std::optional<double> rt_retrain;
  std::optional<double> mia_auc_ours;
  std::optional<double> mia_auc_retrain;
  std::optional<KdeDistances> kde;
};

struct EfficacyRun {
  std::uint64_t seed = 0;
  double f1_poisoned = 0.0;
  double f1_unlearned = 0.0;
  double delta = 0.0;
};

struct EfficacyResult {
  std::vector<EfficacyRun> runs;
  double mean_delta = 0.0;
  std::size_t positive_runs = 0;
};

struct MetricSummary {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::size_t count = 0;
};

// Throws InvalidRequestError for an empty sample.
MetricSummary Summarize(std::span<const double> values);

struct EvalReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<SeedResult> runs;
  std::optional<EfficacyResult> efficacy;
};

// Pretty-printed JSON with per-metric mean/std over seeds followed by the
// per-seed results. Throws NumericalError if any reported value is not
// finite.
std::string ReportToJson(const EvalReport& report);
void WriteReport(const EvalReport& report, const std::filesystem::path& path);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_REPORT_H_
