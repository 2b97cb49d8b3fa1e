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

#ifndef NODEUNLEARN_SRC_JSON_CODEC_H_
#define NODEUNLEARN_SRC_JSON_CODEC_H_

#include <string>

#include <nlohmann/json.hpp>

#include "nodeunlearn/backbone.h"
#include "nodeunlearn/matrix.h"
#include "nodeunlearn/mlp.h"
#include "nodeunlearn/rectifier.h"

namespace nodeunlearn::internal {

using Json = nlohmann::ordered_json;

Json MatrixToJson(const Matrix& m);
Matrix MatrixFromJson(const Json& j, const std::string& where);

Json HyperToJson(const BackboneHyper& hyper);
BackboneHyper HyperFromJson(const Json& j);

Json RectifierConfigToJson(const RectifierConfig& config);
RectifierConfig RectifierConfigFromJson(const Json& j);

Json MlpToJson(const Mlp& mlp);
Mlp MlpFromJson(const Json& j, const std::string& where);

}  // namespace nodeunlearn::internal

#endif  // NODEUNLEARN_SRC_JSON_CODEC_H_
