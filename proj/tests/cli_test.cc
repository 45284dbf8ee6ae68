// Copyright 2026 The imgrand Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "imgrand/cli/commands.h"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "imgrand/cli/report.h"
#include "imgrand/error.h"
#include "imgrand/pgm.h"
#include "json.hpp"

namespace imgrand::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ("imgrand_cli_" + std::string(
               ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Synth(const std::string& pattern, int size = 256,
                    const std::string& seed = "1") {
    const std::string out = Path(pattern + std::to_string(size) + ".pgm");
    const Result r = Invoke({"synth", "--pattern", pattern, "--width", std::to_string(size),
                          "--height", std::to_string(size), "--seed", seed, "--out", out});
    EXPECT_EQ(r.code, kExitPass) << r.err;
    return out;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"evaluate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitPass);
  const std::string image = Synth("uniform");
  EXPECT_EQ(Invoke({"evaluate", "--image", image, "--alpha", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"evaluate", "--image", image, "--mode", "compression"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"evaluate", "--image", image, "--sampling", "spiral"}).code, kExitUsage);
}

TEST_F(CliTest, MissingAndMalformedImages) {
  Result r = Invoke({"evaluate", "--image", Path("nope.pgm")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("io"), std::string::npos);

  WriteFileBytes(Path("bad.pgm"), std::vector<std::uint8_t>{'P', '5', '\n', '4'});
  r = Invoke({"evaluate", "--image", Path("bad.pgm")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("parse"), std::string::npos);
}

TEST_F(CliTest, EvaluateExitCodesFollowVerdict) {
  const std::string uniform = Synth("uniform", 512);
  const std::string ramp = Synth("ramp", 512);
  EXPECT_EQ(Invoke({"evaluate", "--image", uniform, "--mode", "encryption"}).code, kExitPass);
  EXPECT_EQ(Invoke({"evaluate", "--image", uniform}).code, kExitPass);
  EXPECT_EQ(Invoke({"evaluate", "--image", ramp}).code, kExitFail);
  EXPECT_EQ(Invoke({"evaluate", "--image", Synth("constant", 64)}).code, kExitFail);
}

TEST_F(CliTest, JsonReportIsDeterministicApartFromTimestamp) {
  const std::string image = Synth("uniform");
  const Result first = Invoke({"evaluate", "--image", image, "--seed", "4"});
  const Result second = Invoke({"evaluate", "--image", image, "--seed", "4"});
  ASSERT_EQ(first.code, kExitPass) << first.err;
  auto a = nlohmann::json::parse(first.out);
  auto b = nlohmann::json::parse(second.out);
  a.erase("created_at");
  b.erase("created_at");
  EXPECT_EQ(a, b);

  EXPECT_EQ(a["schema_version"], "1.0");
  EXPECT_EQ(a["tool"]["name"], "imgrand");
  EXPECT_EQ(a["image"]["width"], 256);
  EXPECT_EQ(a["image"]["sha256"].get<std::string>().size() % 64, 0u);
  EXPECT_EQ(a["report"]["round_passes"].size(), 10u);
  EXPECT_EQ(a["report"]["verdict"], "indistinguishable_from_random");
  EXPECT_EQ(a["report"]["config"]["seed"], 4);
}

TEST_F(CliTest, JsonFlagWritesFileAndSummary) {
  const std::string image = Synth("uniform");
  const Result r = Invoke({"evaluate", "--image", image, "--json", Path("r.json")});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("indistinguishable_from_random"), std::string::npos);
  const auto bytes = ReadFileBytes(Path("r.json"));
  const auto json = nlohmann::json::parse(bytes.begin(), bytes.end());
  const ReportDocument doc = ReportFromJson(json);
  EXPECT_EQ(doc.image_path, image);
  EXPECT_EQ(doc.report.config.n_tests, 1000);
}

TEST_F(CliTest, ScoreTextHasAtLeastThreeDecimals) {
  EXPECT_EQ(FormatScore(0.96, 1000), "0.960");
  EXPECT_EQ(FormatScore(1.0, 10), "1.000");
  EXPECT_EQ(FormatScore(0.95, 100000), "0.95000");
  const Result r = Invoke({"evaluate", "--image", Synth("ramp"), "--n", "40", "--t", "2"});
  const auto json = nlohmann::json::parse(r.out);
  EXPECT_EQ(json["report"]["score_text"].get<std::string>().size(), 5u);
}

TEST_F(CliTest, ReportJsonRoundTrip) {
  const Result r = Invoke({"evaluate", "--image", Synth("checker"), "--m", "100",
                        "--lambda", "0.5", "--sampling", "uniform"});
  const auto json = nlohmann::json::parse(r.out);
  const ReportDocument doc = ReportFromJson(json);
  EXPECT_EQ(doc.report.pairs_used, 100);
  EXPECT_EQ(doc.report.config.sampling, PairSampling::kUniform);
  EXPECT_EQ(ReportFromJson(nlohmann::json::parse(ToJson(doc).dump())), doc);

  const Result degenerate = Invoke({"evaluate", "--image", Synth("constant", 64)});
  const ReportDocument empty = ReportFromJson(nlohmann::json::parse(degenerate.out));
  EXPECT_EQ(empty.report.verdict, Verdict::kDegenerateImage);
  EXPECT_FALSE(empty.report.interval.has_value());
  EXPECT_EQ(ReportFromJson(nlohmann::json::parse(ToJson(empty).dump())), empty);

  EXPECT_THROW(ReportFromJson(nlohmann::json::parse("{\"report\": 3}")), imgrand::Error);
}

TEST_F(CliTest, StatsRows) {
  Result r = Invoke({"stats", "--image", Synth("uniform", 256), "--mode", "encryption"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("85.33, 60.34, 711, 80.90~89.77"), std::string::npos) << r.out;

  r = Invoke({"stats", "--image", Synth("uniform", 1024), "--mode", "encryption"});
  EXPECT_NE(r.out.find("85.33, 60.34, 1790, 82.54~88.13"), std::string::npos) << r.out;

  r = Invoke({"stats", "--image", Synth("constant", 64)});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("0.00, 0.00, -, -"), std::string::npos);
  EXPECT_NE(r.out.find("degenerate"), std::string::npos);
}

TEST_F(CliTest, RpmShuffledRampPasses) {
  const std::string ramp = Synth("ramp", 512);
  ASSERT_EQ(Invoke({"transform", "--image", ramp, "--method", "rpm", "--out",
                 Path("rpm.pgm")}).code, kExitPass);
  EXPECT_EQ(Invoke({"evaluate", "--image", Path("rpm.pgm")}).code, kExitPass);
}

TEST_F(CliTest, ArnoldByPeriodIsIdentity) {
  const std::string image = Synth("uniform", 64);
  // The cat map on a 64x64 torus has period 48.
  ASSERT_EQ(Invoke({"transform", "--image", image, "--method", "arnold", "--iterations", "48",
                 "--out", Path("a.pgm")}).code, kExitPass);
  EXPECT_EQ(ReadFileBytes(Path("a.pgm")), ReadFileBytes(image));

  const std::string wide = Path("wide.pgm");
  ASSERT_EQ(Invoke({"synth", "--pattern", "ramp", "--width", "32", "--height", "16", "--out",
                 wide}).code, kExitPass);
  EXPECT_EQ(Invoke({"transform", "--image", wide, "--method", "arnold", "--out",
                 Path("b.pgm")}).code, kExitUsage);
}

TEST_F(CliTest, LogisticTwiceIsIdentity) {
  const std::string image = Synth("ramp", 64);
  ASSERT_EQ(Invoke({"transform", "--image", image, "--method", "lme", "--seed", "3", "--out",
                 Path("once.pgm")}).code, kExitPass);
  ASSERT_EQ(Invoke({"transform", "--image", Path("once.pgm"), "--method", "lme", "--seed", "3",
                 "--out", Path("twice.pgm")}).code, kExitPass);
  EXPECT_EQ(ReadFileBytes(Path("twice.pgm")), ReadFileBytes(image));
  EXPECT_NE(ReadFileBytes(Path("once.pgm")), ReadFileBytes(image));
}

TEST_F(CliTest, BlockModes) {
  const std::string image = Synth("stripes", 64);
  Result r = Invoke({"transform", "--image", image, "--method", "ecb", "--cipher", "none",
                  "--out", Path("e.pgm")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("feature_not_available"), std::string::npos);
  EXPECT_EQ(Invoke({"transform", "--image", image, "--method", "cbc", "--key", "zz",
                 "--out", Path("c.pgm")}).code, kExitUsage);
#ifdef IMGRAND_HAVE_OPENSSL
  EXPECT_EQ(Invoke({"transform", "--image", image, "--method", "cbc", "--key",
                 "000102030405060708090a0b0c0d0e0f", "--out", Path("c.pgm")}).code,
            kExitPass);
  EXPECT_EQ(ReadPgmFile(Path("c.pgm")).width(), 64);
#endif
}

}  // namespace
}  // namespace imgrand::cli
