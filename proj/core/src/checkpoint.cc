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

#include "nodeunlearn/checkpoint.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json_codec.h"
#include "nodeunlearn/error.h"

namespace nodeunlearn {
namespace internal {

Json MatrixToJson(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = m.values();
  return j;
}

Matrix MatrixFromJson(const Json& j, const std::string& where) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    auto data = j.at("data").get<std::vector<double>>();
    if (data.size() != rows * cols) {
      throw ParseError(where + ": matrix data has " + std::to_string(data.size()) +
                       " values, expected " + std::to_string(rows * cols));
    }
    return Matrix(rows, cols, std::move(data));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json HyperToJson(const BackboneHyper& h) {
  Json j;
  j["hidden_dim"] = h.hidden_dim;
  j["k_hops"] = h.k_hops;
  j["learning_rate"] = h.learning_rate;
  j["weight_decay"] = h.weight_decay;
  j["epochs"] = h.epochs;
  j["seed"] = h.seed;
  return j;
}

BackboneHyper HyperFromJson(const Json& j) {
  BackboneHyper h;
  h.hidden_dim = j.at("hidden_dim").get<std::size_t>();
  h.k_hops = j.at("k_hops").get<int>();
  h.learning_rate = j.at("learning_rate").get<double>();
  h.weight_decay = j.at("weight_decay").get<double>();
  h.epochs = j.at("epochs").get<int>();
  h.seed = j.at("seed").get<std::uint64_t>();
  return h;
}

Json RectifierConfigToJson(const RectifierConfig& c) {
  Json j;
  j["mlp_hidden"] = c.mlp_hidden;
  j["epochs"] = c.epochs;
  j["learning_rate"] = c.learning_rate;
  j["local_top_frac"] = c.local_top_frac;
  j["hop_radius"] = c.hop_radius;
  j["high_ratio_mode"] = c.high_ratio_mode ? Json(*c.high_ratio_mode) : Json("auto");
  j["inter_plus_mode"] = c.inter_plus_mode ? Json(*c.inter_plus_mode) : Json("auto");
  j["use_range_null"] = c.use_range_null;
  j["bounded_ascent"] = c.bounded_ascent;
  j["activation"] = std::string(ActivationName(c.activation));
  j["seed"] = c.seed;
  return j;
}

namespace {

std::optional<bool> TriStateFromJson(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string() && j.get<std::string>() == "auto") return std::nullopt;
  throw ParseError("expected true, false or \"auto\"");
}

}  // namespace

RectifierConfig RectifierConfigFromJson(const Json& j) {
  RectifierConfig c;
  c.mlp_hidden = j.at("mlp_hidden").get<std::size_t>();
  c.epochs = j.at("epochs").get<int>();
  c.learning_rate = j.at("learning_rate").get<double>();
  c.local_top_frac = j.at("local_top_frac").get<double>();
  c.hop_radius = j.at("hop_radius").get<int>();
  c.high_ratio_mode = TriStateFromJson(j.at("high_ratio_mode"));
  c.inter_plus_mode = TriStateFromJson(j.at("inter_plus_mode"));
  c.use_range_null = j.at("use_range_null").get<bool>();
  c.bounded_ascent = j.at("bounded_ascent").get<bool>();
  c.activation = ParseActivation(j.at("activation").get<std::string>());
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

Json MlpToJson(const Mlp& mlp) {
  Json j;
  j["activation"] = std::string(ActivationName(mlp.activation()));
  Json layers = Json::array();
  for (const DenseLayer& l : mlp.layers()) {
    Json lj;
    lj["weight"] = MatrixToJson(l.weight);
    lj["bias"] = l.bias;
    layers.push_back(std::move(lj));
  }
  j["layers"] = std::move(layers);
  return j;
}

Mlp MlpFromJson(const Json& j, const std::string& where) {
  std::vector<DenseLayer> layers;
  for (const Json& lj : j.at("layers")) {
    layers.push_back(DenseLayer{MatrixFromJson(lj.at("weight"), where),
                                lj.at("bias").get<std::vector<double>>()});
  }
  return Mlp(std::move(layers), ParseActivation(j.at("activation").get<std::string>()));
}

}  // namespace internal

namespace {

using internal::Json;

Json ParseJsonFile(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

template <typename Fn>
auto WithParseContext(const std::filesystem::path& path, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void PutU64(std::ostream& out, std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t GetU64(std::istream& in, const std::filesystem::path& path) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8)) {
    throw ParseError(path.string() + ": truncated header");
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out.flush()) throw Error("failed writing " + path.string());
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void SaveModel(const TrainedModel& model, const std::filesystem::path& path) {
  Json j;
  j["version"] = 1;
  j["kind"] = std::string(BackboneName(model.kind));
  j["hyper"] = internal::HyperToJson(model.hyper);
  Json weights = Json::array();
  for (const Matrix& w : model.weights) weights.push_back(internal::MatrixToJson(w));
  j["weights"] = std::move(weights);
  WriteTextFile(path, j.dump(2) + "\n");
}

TrainedModel LoadModel(const std::filesystem::path& path) {
  const Json j = ParseJsonFile(path);
  return WithParseContext(path, [&] {
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported version");
    TrainedModel model;
    model.kind = ParseBackbone(j.at("kind").get<std::string>());
    model.hyper = internal::HyperFromJson(j.at("hyper"));
    for (const Json& w : j.at("weights")) {
      model.weights.push_back(internal::MatrixFromJson(w, "weights"));
    }
    const std::size_t expected = model.kind == BackboneKind::kGcn ? 2 : 1;
    if (model.weights.size() != expected) {
      throw ParseError("expected " + std::to_string(expected) + " weight matrices");
    }
    return model;
  });
}

void SaveMatrices(std::span<const Matrix> matrices, const std::filesystem::path& path) {
  static_assert(std::endian::native == std::endian::little,
                "binary captures assume a little-endian host");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(kCaptureMagic, sizeof(kCaptureMagic));
  PutU64(out, matrices.size());
  for (const Matrix& m : matrices) {
    PutU64(out, m.rows());
    PutU64(out, m.cols());
    out.write(reinterpret_cast<const char*>(m.data().data()),
              static_cast<std::streamsize>(m.size() * sizeof(double)));
  }
  if (!out.flush()) throw Error("failed writing " + path.string());
}

std::vector<Matrix> LoadMatrices(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  char magic[sizeof(kCaptureMagic)];
  if (!in.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kCaptureMagic, sizeof(magic)) != 0) {
    throw ParseError(path.string() + ": bad magic");
  }
  const std::uint64_t count = GetU64(in, path);
  std::vector<Matrix> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t rows = GetU64(in, path);
    const std::uint64_t cols = GetU64(in, path);
    if (cols != 0 && rows > (std::uint64_t{1} << 40) / cols) {
      throw ParseError(path.string() + ": implausible matrix shape");
    }
    Matrix m(rows, cols);
    if (!in.read(reinterpret_cast<char*>(m.data().data()),
                 static_cast<std::streamsize>(m.size() * sizeof(double)))) {
      throw ParseError(path.string() + ": truncated matrix data");
    }
    out.push_back(std::move(m));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw ParseError(path.string() + ": trailing bytes");
  }
  return out;
}

void SaveCapture(const Capture& capture, const std::filesystem::path& path) {
  const Matrix ms[] = {capture.hidden, capture.output};
  SaveMatrices(ms, path);
}

Capture LoadCapture(const std::filesystem::path& path) {
  std::vector<Matrix> ms = LoadMatrices(path);
  if (ms.size() != 2 || ms[0].rows() != ms[1].rows()) {
    throw ParseError(path.string() + ": expected two matrices with matching rows");
  }
  return Capture{std::move(ms[0]), std::move(ms[1])};
}

void SaveRectifier(const Rectifier& rectifier, const std::filesystem::path& path) {
  Json j;
  j["version"] = 1;
  j["gamma"] = rectifier.gamma();
  j["beta"] = rectifier.beta();
  j["config"] = internal::RectifierConfigToJson(rectifier.config());
  j["h"] = internal::MatrixToJson(rectifier.op().h());
  j["mlp1"] = internal::MlpToJson(rectifier.interaction());
  j["mlp2"] = internal::MlpToJson(rectifier.reconstruction());
  WriteTextFile(path, j.dump(2) + "\n");
}

Rectifier LoadRectifier(const std::filesystem::path& path) {
  const Json j = ParseJsonFile(path);
  return WithParseContext(path, [&] {
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported version");
    return Rectifier(internal::MlpFromJson(j.at("mlp1"), "mlp1"),
                     internal::MlpFromJson(j.at("mlp2"), "mlp2"),
                     DegenerateOperator(internal::MatrixFromJson(j.at("h"), "h")),
                     j.at("gamma").get<double>(), j.at("beta").get<double>(),
                     internal::RectifierConfigFromJson(j.at("config")));
  });
}

}  // namespace nodeunlearn
