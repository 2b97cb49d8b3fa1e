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

#include "nodeunlearn/dataset_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include <nlohmann/json.hpp>

#include "nodeunlearn/error.h"

namespace nodeunlearn {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

[[noreturn]] void Fail(const fs::path& file, std::size_t line,
                       const std::string& what) {
  throw ParseError(file.filename().string() + ":" + std::to_string(line) +
                   ": " + what);
}

std::string ReadFile(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError(file.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Splits into lines, dropping a trailing '\r' and a final empty line.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
bool ParseNumber(std::string_view field, T& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

json ReadJson(const fs::path& file) {
  const std::string text = ReadFile(file);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(file.filename().string() + ":1: " + e.what());
  }
}

std::size_t JsonCount(const json& j, const char* key, const fs::path& file) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    Fail(file, 1, std::string("missing or non-integer \"") + key + "\"");
  }
  return j[key].get<std::size_t>();
}

std::vector<NodeId> JsonIds(const json& j, const char* key, std::size_t n,
                            const fs::path& file) {
  if (!j.contains(key) || !j[key].is_array()) {
    Fail(file, 1, std::string("missing array \"") + key + "\"");
  }
  std::vector<NodeId> ids;
  for (const json& v : j[key]) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
      Fail(file, 1, std::string("invalid node id in \"") + key + "\"");
    }
    ids.push_back(v.get<NodeId>());
  }
  return ids;
}

void WriteFile(const fs::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(file.string() + ": cannot open for writing");
  out << text;
  if (!out) throw Error(file.string() + ": write failed");
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw NumericalError("FormatDouble: conversion failed");
  return std::string(buf, ptr);
}

Dataset LoadDataset(const fs::path& dir) {
  for (const char* name :
       {"meta.json", "features.csv", "labels.csv", "edges.csv", "split.json"}) {
    if (!fs::exists(dir / name)) {
      throw ParseError((dir / name).string() + ": missing file");
    }
  }

  const fs::path meta_file = dir / "meta.json";
  const json meta = ReadJson(meta_file);
  const std::size_t n = JsonCount(meta, "n", meta_file);
  const std::size_t d = JsonCount(meta, "d", meta_file);
  const std::size_t num_classes = JsonCount(meta, "num_classes", meta_file);
  const std::string name =
      meta.contains("name") && meta["name"].is_string() ? meta["name"].get<std::string>() : "";

  // features.csv
  const fs::path feat_file = dir / "features.csv";
  const std::string feat_text = ReadFile(feat_file);
  const auto feat_lines = SplitLines(feat_text);
  if (feat_lines.empty()) Fail(feat_file, 1, "missing header");
  if (SplitFields(feat_lines[0]).size() != d) {
    Fail(feat_file, 1, "header does not have d=" + std::to_string(d) + " columns");
  }
  if (feat_lines.size() - 1 != n) {
    Fail(feat_file, feat_lines.size(), "expected " + std::to_string(n) +
                                           " rows, found " +
                                           std::to_string(feat_lines.size() - 1));
  }
  Matrix features(n, d);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t line_no = r + 2;
    const auto fields = SplitFields(feat_lines[r + 1]);
    if (fields.size() != d) {
      Fail(feat_file, line_no, "expected " + std::to_string(d) + " values, found " +
                                   std::to_string(fields.size()));
    }
    auto row = features.row(r);
    for (std::size_t c = 0; c < d; ++c) {
      if (!ParseNumber(fields[c], row[c])) {
        Fail(feat_file, line_no, "malformed float '" + std::string(fields[c]) + "'");
      }
    }
  }

  // labels.csv
  const fs::path label_file = dir / "labels.csv";
  const std::string label_text = ReadFile(label_file);
  const auto label_lines = SplitLines(label_text);
  if (label_lines.empty()) Fail(label_file, 1, "missing header");
  if (label_lines.size() - 1 != n) {
    Fail(label_file, label_lines.size(), "expected " + std::to_string(n) + " rows");
  }
  std::vector<int> labels(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t line_no = r + 2;
    const auto fields = SplitFields(label_lines[r + 1]);
    std::size_t id = 0;
    int label = 0;
    if (fields.size() != 2 || !ParseNumber(fields[0], id) ||
        !ParseNumber(fields[1], label)) {
      Fail(label_file, line_no, "malformed row '" + std::string(label_lines[r + 1]) + "'");
    }
    if (id >= n) Fail(label_file, line_no, "node id " + std::to_string(id) + " >= n");
    if (labels[id] != -1) Fail(label_file, line_no, "duplicate node id " + std::to_string(id));
    if (label < 0 || static_cast<std::size_t>(label) >= num_classes) {
      Fail(label_file, line_no, "label " + std::to_string(label) + " >= num_classes=" +
                                    std::to_string(num_classes));
    }
    labels[id] = label;
  }

  // edges.csv
  const fs::path edge_file = dir / "edges.csv";
  const std::string edge_text = ReadFile(edge_file);
  const auto edge_lines = SplitLines(edge_text);
  if (edge_lines.empty()) Fail(edge_file, 1, "missing header");
  std::vector<Edge> edges;
  edges.reserve(edge_lines.size() - 1);
  for (std::size_t r = 1; r < edge_lines.size(); ++r) {
    const std::size_t line_no = r + 1;
    const auto fields = SplitFields(edge_lines[r]);
    NodeId u = 0, v = 0;
    if (fields.size() != 2 || !ParseNumber(fields[0], u) || !ParseNumber(fields[1], v)) {
      Fail(edge_file, line_no, "malformed row '" + std::string(edge_lines[r]) + "'");
    }
    if (u >= n || v >= n) Fail(edge_file, line_no, "endpoint out of range");
    if (u == v) Fail(edge_file, line_no, "self-loop on node " + std::to_string(u));
    if (u > v) Fail(edge_file, line_no, "src must be < dst");
    const Edge e{u, v};
    if (!edges.empty()) {
      if (edges.back() == e) {
        Fail(edge_file, line_no, "duplicate edge " + std::to_string(u) + "," + std::to_string(v));
      }
      if (e < edges.back()) Fail(edge_file, line_no, "rows not sorted");
    }
    edges.push_back(e);
  }

  // split.json
  const fs::path split_file = dir / "split.json";
  const json split_json = ReadJson(split_file);
  SplitSpec split;
  split.train = JsonIds(split_json, "train", n, split_file);
  split.test = JsonIds(split_json, "test", n, split_file);
  try {
    ValidateSplit(split, n);
  } catch (const Error& e) {
    Fail(split_file, 1, e.what());
  }

  return Dataset{Graph(std::move(features), std::move(labels), num_classes,
                       std::move(edges), name),
                 std::move(split)};
}

void SaveDataset(const fs::path& dir, const Graph& graph, const SplitSpec& split) {
  fs::create_directories(dir);
  const std::size_t n = graph.num_nodes();
  const std::size_t d = graph.feature_dim();

  json meta = {{"n", n}, {"d", d}, {"num_classes", graph.num_classes()},
               {"name", graph.name()}};
  WriteFile(dir / "meta.json", meta.dump(2) + "\n");

  std::string text;
  for (std::size_t c = 0; c < d; ++c) {
    if (c > 0) text += ',';
    text += "f" + std::to_string(c);
  }
  text += '\n';
  for (std::size_t r = 0; r < n; ++r) {
    auto row = graph.features().row(r);
    for (std::size_t c = 0; c < d; ++c) {
      if (c > 0) text += ',';
      text += FormatDouble(row[c]);
    }
    text += '\n';
  }
  WriteFile(dir / "features.csv", text);

  text = "id,label\n";
  for (std::size_t i = 0; i < n; ++i) {
    text += std::to_string(i) + "," + std::to_string(graph.labels()[i]) + "\n";
  }
  WriteFile(dir / "labels.csv", text);

  text = "src,dst\n";
  for (const Edge& e : graph.edges()) {
    text += std::to_string(e.u) + "," + std::to_string(e.v) + "\n";
  }
  WriteFile(dir / "edges.csv", text);

  json split_json = {{"train", split.train}, {"test", split.test}};
  WriteFile(dir / "split.json", split_json.dump() + "\n");
}

}  // namespace nodeunlearn
