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

#ifndef NODEUNLEARN_CHECKPOINT_H_
#define NODEUNLEARN_CHECKPOINT_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nodeunlearn/backbone.h"
#include "nodeunlearn/matrix.h"
#include "nodeunlearn/rectifier.h"

namespace nodeunlearn {

inline constexpr char kCaptureMagic[8] = {'N', 'U', 'C', 'A', 'P', 'v', '0', '1'};

// Backbone weights and hyperparameters as JSON. The capture is not part of
// this file.
void SaveModel(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel LoadModel(const std::filesystem::path& path);

// Binary matrix list: magic, uint64 count, then per matrix uint64 rows,
// uint64 cols and rows*cols little-endian doubles.
void SaveMatrices(std::span<const Matrix> matrices, const std::filesystem::path& path);
std::vector<Matrix> LoadMatrices(const std::filesystem::path& path);

void SaveCapture(const Capture& capture, const std::filesystem::path& path);
Capture LoadCapture(const std::filesystem::path& path);

void SaveRectifier(const Rectifier& rectifier, const std::filesystem::path& path);
Rectifier LoadRectifier(const std::filesystem::path& path);

// I/O failures throw Error.
void WriteTextFile(const std::filesystem::path& path, const std::string& text);
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_CHECKPOINT_H_
