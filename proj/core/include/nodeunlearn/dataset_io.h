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

#ifndef NODEUNLEARN_DATASET_IO_H_
#define NODEUNLEARN_DATASET_IO_H_

#include <filesystem>
#include <string>

#include "nodeunlearn/graph.h"

namespace nodeunlearn {

struct Dataset {
  Graph graph;
  SplitSpec split;
};

// Interchange directory layout (UTF-8, LF line endings, one header row per
// CSV file):
//
//   meta.json     {"n": .., "d": .., "num_classes": .., "name": ..}
//   features.csv  header f0..f{d-1}; row k holds the features of node k
//   labels.csv    header id,label; one row per node
//   edges.csv     header src,dst; src < dst, strictly increasing rows
//   split.json    {"train": [ids..], "test": [ids..]}
//
// Any violation throws ParseError naming the file and line.
Dataset LoadDataset(const std::filesystem::path& dir);

// Writes the layout above. Floats use the shortest representation that
// parses back to the identical double, so Load(Save(x)) is bit-exact.
void SaveDataset(const std::filesystem::path& dir, const Graph& graph,
                 const SplitSpec& split);

// Shortest round-trip decimal for `value`.
std::string FormatDouble(double value);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_DATASET_IO_H_
