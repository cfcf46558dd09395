// Copyright 2026 The FairCC Authors.
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

#include "faircc/cli.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "faircc/error.h"
#include "faircc/experiment.h"
#include "faircc/io.h"
#include "faircc/oracle.h"

namespace faircc {
namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("faircc_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  int Run(std::vector<std::string> args) {
    args.insert(args.begin(), "faircc");
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  void WriteInstance(const SignedCompleteGraph& g,
                     const ColorAssignment& colors) {
    WriteGraphJson(Path("g.json"), g);
    WriteColorsCsv(Path("c.csv"), colors);
  }

  std::filesystem::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST(SpecFlagsTest, Parsing) {
  EXPECT_EQ(ParseRatio("1:3"), 3);
  EXPECT_THROW(ParseRatio("2:3"), ParseError);
  EXPECT_THROW(ParseRatio("1:0"), ParseError);
  EXPECT_EQ(ParseBounds("1:1..1:2"), (RatioBound{1, 2}));
  EXPECT_THROW(ParseBounds("1:3..1:2"), ParseError);
  EXPECT_THROW(ParseBounds("1:3"), ParseError);
  EXPECT_EQ(ParseWeights("1:2:3"), (std::vector<int>{1, 2, 3}));
  EXPECT_THROW(ParseWeights("1::2"), ParseError);
}

TEST(SpecFlagsTest, BroadcastPerColorAndInference) {
  const ColorAssignment colors({0, 1, 1, 2, 2, 2, 2, 0});
  EXPECT_EQ(*SpecFromFlags({"1:1"}, {}, 0, colors),
            FairnessSpec::Exact(0, {1, 1, 1}));
  EXPECT_EQ(*SpecFromFlags({"1:1", "1:2"}, {}, 0, colors),
            FairnessSpec::Exact(0, {1, 1, 2}));
  EXPECT_EQ(*SpecFromFlags({}, {"1:1..1:2"}, 0, colors),
            FairnessSpec(0, {{1, 1}, {1, 2}, {1, 2}}));
  EXPECT_EQ(*SpecFromFlags({}, {}, 0, colors),
            FairnessSpec::Exact(0, {1, 1, 2}));
  EXPECT_FALSE(SpecFromFlags({}, {}, 2, colors).has_value());
  EXPECT_THROW(SpecFromFlags({"1:1"}, {"1:1..1:2"}, 0, colors),
               InvalidInputError);
  EXPECT_THROW(SpecFromFlags({"1:1", "1:1", "1:1"}, {}, 0, colors),
               InvalidInputError);
  EXPECT_THROW(SpecFromFlags({}, {}, 3, colors), InvalidInputError);
}

TEST_F(CliTest, ClusterAllPositive) {
  WriteInstance(SignedCompleteGraph(4), ColorAssignment({0, 1, 0, 1}));
  ASSERT_EQ(Run({"cluster", "--graph", Path("g.json"), "--colors",
                 Path("c.csv"), "--algo", "cc", "--out-result",
                 Path("r.json"), "--out-clustering", Path("k.json")}),
            0)
      << err_.str();
  const ResultRow row = ResultRowFromJson(ParseJson(ReadTextFile(Path("r.json")), "r"));
  EXPECT_EQ(row.clusters, 1);
  EXPECT_EQ(row.disagreements, 0);
  EXPECT_EQ(ReadClusteringJson(Path("k.json")).num_clusters(), 1);
}

TEST_F(CliTest, ClusterFairPair) {
  WriteInstance(SignedCompleteGraph(2), ColorAssignment({0, 1}));
  ASSERT_EQ(Run({"cluster", "--graph", Path("g.json"), "--colors",
                 Path("c.csv"), "--algo", "faircc", "--ratio", "1:1",
                 "--out-result", Path("r.json")}),
            0);
  EXPECT_TRUE(
      ResultRowFromJson(ParseJson(ReadTextFile(Path("r.json")), "r")).fair);
}

TEST_F(CliTest, ClusterIsByteIdenticalAcrossReruns) {
  Rng rng(5);
  WriteInstance(RandomSignedGraph(12, 0.5, rng), RandomColoring({4, 8}, rng));
  for (const std::string algo : {"cc", "wmatch", "ufaircc", "ccmerge", "faircc"}) {
    std::vector<std::string> args = {
        "cluster", "--graph", Path("g.json"), "--colors", Path("c.csv"),
        "--algo", algo, "--ratio", "1:2", "--seed", "17", "--debug-dump",
        Path("d.json")};
    auto with_out = [&](const std::string& tag) {
      auto a = args;
      a.insert(a.end(), {"--out-result", Path("r" + tag), "--out-clustering",
                         Path("k" + tag)});
      return a;
    };
    ASSERT_EQ(Run(with_out("1")), 0) << err_.str();
    const std::string first_dump = ReadTextFile(Path("d.json"));
    ASSERT_EQ(Run(with_out("2")), 0);
    EXPECT_EQ(ReadTextFile(Path("r1")), ReadTextFile(Path("r2")));
    EXPECT_EQ(ReadTextFile(Path("k1")), ReadTextFile(Path("k2")));
    EXPECT_EQ(ReadTextFile(Path("d.json")), first_dump);
  }
}

TEST_F(CliTest, ReadBackFairFlagMatches) {
  Rng rng(6);
  const ColorAssignment colors = RandomColoring({3, 6}, rng);
  WriteInstance(RandomSignedGraph(9, 0.5, rng), colors);
  for (const std::string algo : {"cc", "ccmerge", "faircc"}) {
    ASSERT_EQ(Run({"cluster", "--graph", Path("g.json"), "--colors",
                   Path("c.csv"), "--algo", algo, "--bounds", "1:1..1:2",
                   "--out-result", Path("r.json"), "--out-clustering",
                   Path("k.json")}),
              0);
    const ResultRow row =
        ResultRowFromJson(ParseJson(ReadTextFile(Path("r.json")), "r"));
    EXPECT_TRUE(FairFlagConsistent(row, ReadClusteringJson(Path("k.json")),
                                   colors, FairnessSpec::TwoColorBounded(1, 2)));
  }
}

TEST_F(CliTest, ExitCodes) {
  WriteInstance(SignedCompleteGraph(4), ColorAssignment({0, 1, 1, 1}));
  EXPECT_EQ(Run({"cluster", "--graph", Path("g.json"), "--colors",
                 Path("c.csv"), "--ratio", "1:1"}),
            2);
  EXPECT_NE(err_.str().find("color 1"), std::string::npos);
  EXPECT_EQ(Run({"cluster", "--graph", Path("missing.json"), "--colors",
                 Path("c.csv")}),
            3);
  WriteTextFile(Path("bad.json"), "{\"n\": 4,");
  EXPECT_EQ(Run({"cluster", "--graph", Path("bad.json"), "--colors",
                 Path("c.csv")}),
            3);
  EXPECT_EQ(Run({"cluster", "--graph", Path("g.json"), "--colors",
                 Path("c.csv"), "--ratio", "2:1"}),
            3);
  EXPECT_EQ(Run({"cluster", "--bogus"}), 3);
  EXPECT_EQ(Run({"--help"}), 0);

  WriteInstance(SignedCompleteGraph(12), ColorAssignment(std::vector<int>(
                                             {0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
                                              0, 1})));
  EXPECT_EQ(Run({"verify", "--graph", Path("g.json"), "--colors",
                 Path("c.csv")}),
            4);
  ::setenv("FAIRCC_ORACLE_MAX_N", "12", 1);
  EXPECT_EQ(Run({"verify", "--graph", Path("g.json"), "--colors",
                 Path("c.csv")}),
            0);
  ::unsetenv("FAIRCC_ORACLE_MAX_N");
}

TEST_F(CliTest, ExperimentCsvShape) {
  Rng rng(7);
  WriteInstance(RandomSignedGraph(10, 0.5, rng), RandomColoring({5, 5}, rng));
  ASSERT_EQ(Run({"experiment", "--graph", Path("g.json"), "--colors",
                 Path("c.csv"), "--algos", "faircc", "--runs", "1", "--out",
                 Path("e.csv")}),
            0);
  const std::string csv = ReadTextFile(Path("e.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);

  ASSERT_EQ(Run({"experiment", "--graph", Path("g.json"), "--colors",
                 Path("c.csv"), "--runs", "3", "--jobs", "3", "--out",
                 Path("a.csv"), "--out-dir", Path("cells")}),
            0);
  ASSERT_EQ(Run({"experiment", "--graph", Path("g.json"), "--colors",
                 Path("c.csv"), "--runs", "3", "--out", Path("b.csv")}),
            0);
  EXPECT_EQ(ReadTextFile(Path("a.csv")), ReadTextFile(Path("b.csv")));
  EXPECT_TRUE(std::filesystem::exists(Path("cells/faircc_seed2.result.json")));
}

TEST_F(CliTest, VerifyReports) {
  WriteInstance(SignedCompleteGraph(4), ColorAssignment({0, 1, 0, 1}));
  ASSERT_EQ(Run({"verify", "--graph", Path("g.json"), "--colors",
                 Path("c.csv"), "--ratio", "1:1"}),
            0);
  EXPECT_NE(out_.str().find("w(M_1) = 0 <= 2 * OPT_fair = 0  ok"),
            std::string::npos)
      << out_.str();
  EXPECT_NE(out_.str().find("cost(faircc) = 0 <= 13 * OPT_fair = 0  ok"),
            std::string::npos);

  WriteGraphJson(Path("t.json"),
                 SignedCompleteGraph::FromNegativeEdges(
                     3, std::vector<std::pair<int, int>>{{0, 2}}));
  ASSERT_EQ(Run({"verify", "--graph", Path("t.json"), "--mirror"}), 0);
  EXPECT_NE(out_.str().find("OPT_fair(mirror(G), 1:1) = 4 == 4 * OPT(G) = 4"),
            std::string::npos)
      << out_.str();

  ASSERT_EQ(Run({"verify", "--random", "100", "--max-n", "8", "--seed", "3"}),
            0);
  EXPECT_NE(out_.str().find("violations 0 / 100 instances"), std::string::npos);
}

TEST_F(CliTest, GenMirrorAndRandom) {
  WriteGraphJson(Path("t.json"),
                 SignedCompleteGraph::FromNegativeEdges(
                     3, std::vector<std::pair<int, int>>{{0, 2}}));
  ASSERT_EQ(Run({"gen", "--mirror", Path("t.json"), "--out-graph",
                 Path("m.json"), "--out-colors", Path("m.csv")}),
            0);
  const MirrorInstance expected = MirrorGraph(ReadGraphJson(Path("t.json")));
  EXPECT_EQ(ReadGraphJson(Path("m.json")), expected.graph);
  EXPECT_EQ(ReadColorsCsv(Path("m.csv")), expected.colors);

  ASSERT_EQ(Run({"gen", "--random", "7", "--color-counts", "3:4", "--seed",
                 "2", "--out-graph", Path("r.json"), "--out-colors",
                 Path("r.csv")}),
            0);
  EXPECT_EQ(ReadColorsCsv(Path("r.csv")).count(1), 4);
}

TEST_F(CliTest, IngestWritesGraphAndColors) {
  WriteTextFile(Path("schema.json"), R"({"columns": [
    {"name": "id", "kind": "id"},
    {"name": "job", "kind": "categorical"},
    {"name": "sex", "kind": "protected"}]})");
  WriteTextFile(Path("d.csv"),
                "id,job,sex\n1,a,F\n2,a,M\n3,b,F\n4,b,M\n5,a,\n");
  ASSERT_EQ(Run({"ingest", "--csv", Path("d.csv"), "--schema",
                 Path("schema.json"), "--out-graph", Path("g.json"),
                 "--out-colors", Path("c.csv")}),
            0)
      << err_.str();
  EXPECT_NE(out_.str().find("dropped 1"), std::string::npos);
  const SignedCompleteGraph g = ReadGraphJson(Path("g.json"));
  EXPECT_EQ(g.NegativeEdges(),
            (std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(ReadColorsCsv(Path("c.csv")), ColorAssignment({0, 1, 0, 1}));
}

}  // namespace
}  // namespace faircc
