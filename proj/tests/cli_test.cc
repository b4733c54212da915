// Copyright 2026 The tensorcomb Authors.
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

#include "tensorcomb/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

namespace tensorcomb {
namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tensorcomb");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("tensorcomb_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, MelonicBubble) {
  Result r = run({"bubble", "melonic", "--d", "3", "--insert", "e0:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["vertices"].size(), 4u);
  EXPECT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(j["pairs"].size(), 2u);
}

TEST_F(CliTest, GlueEnumerateRootedCsv) {
  std::string b1 = write("b1.json", run({"bubble", "melonic", "--d", "3", "--insert", "e0:1"}).out);
  std::string out = path("glue.csv");
  Result r = run({"glue", "enumerate", "--bubble", b1, "--count", "2", "--mode", "rooted", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "graph_key,count,F_01,F_02,F_03,F,E,omega,delta");
  int max_f = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 9u);
    max_f = std::max(max_f, std::stoi(cells[5]));
  }
  EXPECT_EQ(max_f, 7);
}

TEST_F(CliTest, GlueEnumerateJson) {
  std::string b1 = write("b1.json", run({"bubble", "melonic", "--d", "3", "--insert", "e0:1"}).out);
  Result r = run({"glue", "enumerate", "--bubble", b1, "--count", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["labeled_total"], 592);
  EXPECT_EQ(j["max_faces"], 9);
}

TEST_F(CliTest, GfCritical) {
  Result r = run({"gf", "critical", "--k", "1", "--lambda", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_NEAR(j["t"].get<double>(), 1.0 / 12, 1e-15);
  EXPECT_NEAR(j["f"].get<double>(), 4.0 / 3, 1e-15);
  EXPECT_EQ(j["regime"], "planar");
  EXPECT_EQ(j["t_digits"].get<std::string>().substr(0, 12), "0.0833333333");
}

TEST_F(CliTest, GfSeriesCsvAndExponent) {
  Result r = run({"gf", "series", "--k", "1", "--lambda", "0", "--order", "4", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n,coefficient\n0,1\n1,2\n2,9\n3,54\n4,378\n");
  Result e = run({"gf", "exponent", "--k", "1", "--lambda", "5"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(Json::parse(e.out)["regime"], "tree");
}

TEST_F(CliTest, GfBivariate) {
  Result r = run({"gf", "series", "--k", "2", "--order", "2", "--bivariate"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["table"][2], Json::array({"34", "16", "2"}));
}

TEST_F(CliTest, PhaseDiagramCsv) {
  std::string out = path("phase.csv");
  Result r = run({"gf", "phase-diagram", "--k-range", "1:2:2", "--lambda-range", "0:4:3", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  std::string line;
  int rows = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "k,lambda,regime,t,f,u,conjectural");
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6);
}

TEST_F(CliTest, FacesDegreeCanon) {
  // Close B_1 with its own pairing: F = 5, omega = 0.
  Json g = Json::parse(run({"bubble", "melonic", "--d", "3", "--insert", "e0:1"}).out);
  for (const Json& pair : g["pairs"]) {
    g["edges"].push_back({{"color", 0}, {"white", pair[0]}, {"black", pair[1]}});
  }
  g.erase("pairs");
  std::string graph = write("g.json", g.dump());
  Result faces = run({"faces", "--graph", graph});
  ASSERT_EQ(faces.code, 0) << faces.err;
  Json census = Json::parse(faces.out);
  EXPECT_EQ(census["total"], 5);
  EXPECT_EQ(census["per_color"]["01"], 1);
  Result degree = run({"degree", "--graph", graph});
  Json deg = Json::parse(degree.out);
  EXPECT_EQ(deg["omega"], 0);
  EXPECT_EQ(deg["melonic"], true);
  Result canon = run({"canon", "--graph", graph});
  EXPECT_EQ(Json::parse(canon.out)["key"].get<std::string>().size(), 16u);
  Result human = run({"degree", "--graph", graph, "--format", "human"});
  EXPECT_NE(human.out.find("omega: 0"), std::string::npos);
  Result valid = run({"validate", "--graph", graph});
  EXPECT_EQ(Json::parse(valid.out)["is_closed"], true);
}

TEST_F(CliTest, EnhanceCommands) {
  std::string n = write("n.json", run({"bubble", "necklace", "--d", "4", "--length", "2",
                                       "--first-half", "1,3"}).out);
  Result r = run({"enhance", "pairing", "--bubble", n, "--verify", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["s"], "4");
  EXPECT_EQ(j["status"], "verified");
  Result e = run({"glue", "enhancement", "--bubble", n, "--b-max", "3"});
  EXPECT_EQ(Json::parse(e.out)["s"], "4");
}

TEST_F(CliTest, MapTree) {
  std::string n = write("n.json", run({"bubble", "necklace", "--d", "4", "--length", "2",
                                       "--first-half", "1,3"}).out);
  Result r = run({"map", "tree", "--bubble", n, "--copies", "3", "--seed", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["faces"], j["formula"]);
  EXPECT_EQ(j["faces"], 10);
}

TEST_F(CliTest, DomainErrorsExitOne) {
  std::string bad = write("bad.json", "{not json");
  Result r = run({"faces", "--graph", bad});
  EXPECT_EQ(r.code, 1);
  Json err = Json::parse(r.err);
  EXPECT_EQ(err["error"], "invalid_json");

  std::string b1 = write("b1.json", run({"bubble", "melonic", "--d", "3", "--insert", "e0:1"}).out);
  Result cap = run({"glue", "enumerate", "--bubble", b1, "--count", "6"});
  EXPECT_EQ(cap.code, 1);
  EXPECT_EQ(Json::parse(cap.err)["error"], "cap_exceeded");

  Result missing = run({"faces", "--graph", path("absent.json")});
  EXPECT_EQ(missing.code, 1);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"gf", "critical", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"bubble", "melonic", "--d", "3", "--insert", "x0:1"}).code, 2);
  EXPECT_EQ(run({"gf", "critical", "--k", "1", "--lambda", "0", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"gf", "critical", "--k", "one", "--lambda", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, PrecisionOption) {
  Result r = run({"gf", "critical", "--k", "1", "--lambda", "0", "--precision", "20"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.err)["error"], "invalid_precision");
}

}  // namespace
}  // namespace tensorcomb
