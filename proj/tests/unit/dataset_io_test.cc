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

#include <cmath>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "nodeunlearn/checkpoint.h"
#include "nodeunlearn/error.h"
#include "nodeunlearn/synthetic.h"
#include "test_support.h"

namespace nodeunlearn {
namespace {

using testing::TempDir;

void ExpectSameDataset(const Dataset& a, const Dataset& b) {
  EXPECT_EQ(a.graph.features(), b.graph.features());
  EXPECT_EQ(a.graph.labels(), b.graph.labels());
  EXPECT_EQ(a.graph.edges(), b.graph.edges());
  EXPECT_EQ(a.graph.num_classes(), b.graph.num_classes());
  EXPECT_EQ(a.graph.name(), b.graph.name());
  EXPECT_EQ(a.split.train, b.split.train);
  EXPECT_EQ(a.split.test, b.split.test);
}

TEST(DatasetIoTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = testing::RandomGraph(30, 0.1, 4, 3, rng);
    Matrix f = g.features();
    // awkward magnitudes exercise the shortest round-trip formatting
    f(0, 0) = 1e-300;
    f(1, 1) = -123456789.123456789;
    f(2, 2) = 0.1 + 0.2;
    g = Graph(f, g.labels(), g.num_classes(), g.edges(), "rt");
    const Dataset data{g, SplitTrainTest(g, 0.9, trial)};
    TempDir dir;
    SaveDataset(dir.path(), data.graph, data.split);
    ExpectSameDataset(LoadDataset(dir.path()), data);
  }
}

TEST(DatasetIoTest, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, (i % 40) - 20);
    EXPECT_EQ(std::stod(FormatDouble(x)), x);
  }
}

class DatasetErrorTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const Graph g(Matrix::FromRows({{1, 2}, {3, 4}, {5, 6}}), {0, 1, 1}, 2, {{0, 1}});
    SaveDataset(dir_.path(), g, SplitSpec{{0, 1}, {2}});
  }
  void Overwrite(const char* name, const std::string& text) {
    WriteTextFile(dir_.path() / name, text);
  }
  std::string LoadError() {
    try {
      LoadDataset(dir_.path());
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  }
  TempDir dir_;
};

TEST_F(DatasetErrorTest, EmptyEdgeFileIsValid) {
  Overwrite("edges.csv", "src,dst\n");
  const Dataset d = LoadDataset(dir_.path());
  EXPECT_EQ(d.graph.num_edges(), 0u);
  EXPECT_EQ(d.graph.row_ptr(), (std::vector<std::size_t>{0, 0, 0, 0}));
}

TEST_F(DatasetErrorTest, DuplicateEdgeNamesFileAndLine) {
  Overwrite("edges.csv", "src,dst\n0,1\n0,1\n");
  EXPECT_EQ(LoadError().rfind("edges.csv:3:", 0), 0u) << LoadError();
}

TEST_F(DatasetErrorTest, LabelOutOfRange) {
  Overwrite("labels.csv", "id,label\n0,0\n1,2\n2,1\n");
  EXPECT_EQ(LoadError().rfind("labels.csv:3:", 0), 0u) << LoadError();
}

TEST_F(DatasetErrorTest, MalformedFeatureRow) {
  Overwrite("features.csv", "f0,f1\n1,2\n3,x\n5,6\n");
  EXPECT_EQ(LoadError().rfind("features.csv:3:", 0), 0u) << LoadError();
}

TEST_F(DatasetErrorTest, SelfLoopAndUnsortedRows) {
  Overwrite("edges.csv", "src,dst\n1,1\n");
  EXPECT_EQ(LoadError().rfind("edges.csv:2:", 0), 0u) << LoadError();
  Overwrite("edges.csv", "src,dst\n1,2\n0,1\n");
  EXPECT_EQ(LoadError().rfind("edges.csv:3:", 0), 0u) << LoadError();
}

TEST_F(DatasetErrorTest, MissingFile) {
  std::filesystem::remove(dir_.path() / "split.json");
  EXPECT_NE(LoadError().find("split.json"), std::string::npos);
}

TEST(SyntheticTest, DisjointTrianglesWhenFullySeparated) {
  SbmOptions o;
  o.blocks = 2;
  o.per_block = 3;
  o.p_in = 1.0;
  o.p_out = 0.0;
  o.feature_dim = 2;
  const Dataset d = GenerateSbm(o);
  EXPECT_EQ(d.graph.edges(),
            (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
  EXPECT_EQ(d.graph.labels(), (std::vector<int>{0, 0, 0, 1, 1, 1}));
}

TEST(SyntheticTest, SameSeedIsByteIdentical) {
  SbmOptions o;
  o.seed = 9;
  TempDir a, b;
  const Dataset da = GenerateSbm(o);
  const Dataset db = GenerateSbm(o);
  SaveDataset(a.path(), da.graph, da.split);
  SaveDataset(b.path(), db.graph, db.split);
  for (const char* f : {"meta.json", "features.csv", "labels.csv", "edges.csv", "split.json"}) {
    EXPECT_EQ(ReadTextFile(a.path() / f), ReadTextFile(b.path() / f)) << f;
  }
  EXPECT_EQ(da.split.train.size(), 450u);
  o.seed = 10;
  EXPECT_NE(GenerateSbm(o).graph.edges(), da.graph.edges());
}

TEST(SyntheticTest, DegenerateOptionsThrow) {
  SbmOptions o;
  o.p_out = o.p_in;
  EXPECT_THROW(GenerateSbm(o), InvalidRequestError);
  o = SbmOptions{};
  o.blocks = 0;
  EXPECT_THROW(GenerateSbm(o), InvalidRequestError);
}

}  // namespace
}  // namespace nodeunlearn
