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

#include "nodeunlearn/report.h"

#include <cmath>
#include <functional>

#include "json_codec.h"
#include "nodeunlearn/checkpoint.h"
#include "nodeunlearn/error.h"

namespace nodeunlearn {
namespace {

using internal::Json;

double Finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw NumericalError(std::string("report: ") + what + " is not finite");
  }
  return v;
}

Json Optional(const std::optional<double>& v, const char* what) {
  return v ? Json(Finite(*v, what)) : Json(nullptr);
}

Json SummaryOf(const std::vector<SeedResult>& runs,
               const std::function<std::optional<double>(const SeedResult&)>& get,
               const char* what) {
  std::vector<double> values;
  for (const SeedResult& r : runs) {
    if (const auto v = get(r)) values.push_back(Finite(*v, what));
  }
  if (values.empty()) return nullptr;
  const MetricSummary s = Summarize(values);
  Json j;
  j["mean"] = s.mean;
  j["std"] = s.stddev;
  j["count"] = s.count;
  return j;
}

}  // namespace

MetricSummary Summarize(std::span<const double> values) {
  if (values.empty()) throw InvalidRequestError("Summarize: no values");
  MetricSummary s;
  s.count = values.size();
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(values.size()));
  return s;
}

std::string ReportToJson(const EvalReport& report) {
  Json j;
  j["command"] = report.command;
  Json config = Json::object();
  for (const auto& [key, value] : report.config) config[key] = value;
  j["config"] = std::move(config);
  Json seeds = Json::array();
  for (const SeedResult& r : report.runs) seeds.push_back(r.seed);
  j["seeds"] = std::move(seeds);

  const auto& runs = report.runs;
  j["f1_original"] = SummaryOf(runs, [](const SeedResult& r) { return std::optional(r.f1_original); }, "f1_original");
  j["f1_unlearned"] = SummaryOf(runs, [](const SeedResult& r) { return r.f1_unlearned; }, "f1_unlearned");
  j["f1_retrain"] = SummaryOf(runs, [](const SeedResult& r) { return r.f1_retrain; }, "f1_retrain");
  j["rt_train"] = SummaryOf(runs, [](const SeedResult& r) { return std::optional(r.rt_train); }, "rt_train");
  j["rt_unlearn"] = SummaryOf(runs, [](const SeedResult& r) { return r.rt_unlearn; }, "rt_unlearn");
  j["rt_retrain"] = SummaryOf(runs, [](const SeedResult& r) { return r.rt_retrain; }, "rt_retrain");
  j["mia_auc_ours"] = SummaryOf(runs, [](const SeedResult& r) { return r.mia_auc_ours; }, "mia_auc_ours");
  j["mia_auc_retrain"] = SummaryOf(runs, [](const SeedResult& r) { return r.mia_auc_retrain; }, "mia_auc_retrain");
  j["kde_unlearned_vs_retrain"] = SummaryOf(
      runs,
      [](const SeedResult& r) {
        return r.kde ? std::optional(r.kde->unlearned_vs_retrain) : std::nullopt;
      },
      "kde distance");
  j["kde_original_vs_retrain"] = SummaryOf(
      runs,
      [](const SeedResult& r) {
        return r.kde ? std::optional(r.kde->original_vs_retrain) : std::nullopt;
      },
      "kde distance");
  j["efficacy_delta"] =
      report.efficacy ? Json(Finite(report.efficacy->mean_delta, "efficacy_delta")) : Json(nullptr);

  Json per_seed = Json::array();
  for (const SeedResult& r : runs) {
    Json e;
    e["seed"] = r.seed;
    e["num_removed"] = r.num_removed;
    e["beta"] = Finite(r.beta, "beta");
    e["gamma"] = Finite(r.gamma, "gamma");
    e["high_ratio"] = r.high_ratio;
    e["inter_plus"] = r.inter_plus;
    e["f1_original"] = Finite(r.f1_original, "f1_original");
    e["f1_unlearned"] = Optional(r.f1_unlearned, "f1_unlearned");
    e["f1_retrain"] = Optional(r.f1_retrain, "f1_retrain");
    e["rt_train"] = Finite(r.rt_train, "rt_train");
    e["rt_unlearn"] = Optional(r.rt_unlearn, "rt_unlearn");
    e["rt_retrain"] = Optional(r.rt_retrain, "rt_retrain");
    e["rectifier_final_loss"] = Optional(r.rectifier_final_loss, "rectifier loss");
    e["mia_auc_ours"] = Optional(r.mia_auc_ours, "mia_auc_ours");
    e["mia_auc_retrain"] = Optional(r.mia_auc_retrain, "mia_auc_retrain");
    if (r.kde) {
      e["kde"] = Json{{"unlearned_vs_retrain", Finite(r.kde->unlearned_vs_retrain, "kde")},
                      {"original_vs_retrain", Finite(r.kde->original_vs_retrain, "kde")}};
    } else {
      e["kde"] = nullptr;
    }
    per_seed.push_back(std::move(e));
  }
  j["runs"] = std::move(per_seed);

  if (report.efficacy) {
    Json eff;
    eff["mean_delta"] = report.efficacy->mean_delta;
    eff["positive_runs"] = report.efficacy->positive_runs;
    Json list = Json::array();
    for (const EfficacyRun& r : report.efficacy->runs) {
      list.push_back(Json{{"seed", r.seed},
                          {"f1_poisoned", Finite(r.f1_poisoned, "f1_poisoned")},
                          {"f1_unlearned", Finite(r.f1_unlearned, "f1_unlearned")},
                          {"delta", Finite(r.delta, "delta")}});
    }
    eff["runs"] = std::move(list);
    j["efficacy"] = std::move(eff);
  }
  return j.dump(2) + "\n";
}

void WriteReport(const EvalReport& report, const std::filesystem::path& path) {
  WriteTextFile(path, ReportToJson(report));
}

}  // namespace nodeunlearn
