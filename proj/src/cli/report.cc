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

#include "imgrand/cli/report.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#include "imgrand/error.h"

namespace imgrand::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void SchemaError(const std::string& what) {
  throw Error(ErrorCode::kParse, "report JSON: " + what);
}

template <typename Enum>
Enum ParseEnum(const json& value, std::optional<Enum> (*parse)(std::string_view),
               const char* field) {
  const auto parsed = parse(value.get<std::string>());
  if (!parsed) SchemaError(std::string("bad value for ") + field);
  return *parsed;
}

}  // namespace

std::string FormatScore(double score, std::int64_t n_tests) {
  const int digits = std::max(
      3, static_cast<int>(std::ceil(std::log10(static_cast<double>(std::max<std::int64_t>(n_tests, 1))))));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, score);
  return buf;
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

ordered_json ToJson(const ReportDocument& doc) {
  const EvaluationReport& r = doc.report;
  const EvaluationConfig& c = r.config;

  ordered_json config;
  config["alpha"] = c.alpha;
  config["n_tests"] = c.n_tests;
  config["t_rounds"] = c.t_rounds;
  config["pairs"] = c.pairs ? ordered_json(*c.pairs) : ordered_json(nullptr);
  config["lambda"] = c.lambda ? ordered_json(*c.lambda) : ordered_json(nullptr);
  config["mode"] = ToString(c.mode);
  config["seed"] = c.seed;
  config["sampling"] = ToString(c.sampling);
  config["max_offset"] = c.max_offset;

  ordered_json interval(nullptr);
  if (r.interval) {
    interval = ordered_json::object();
    interval["lower"] = r.interval->lower;
    interval["upper"] = r.interval->upper;
    interval["alpha"] = r.interval->alpha;
    interval["pairs"] = r.interval->pairs;
  }

  ordered_json report;
  report["score"] = r.score;
  report["score_text"] = FormatScore(r.score, c.n_tests);
  report["verdict"] = ToString(r.verdict);
  report["mode"] = ToString(r.mode);
  report["distribution_source"] = ToString(r.distribution_source);
  report["round_passes"] = r.round_passes;
  report["interval"] = interval;
  report["stats"] = {{"mean", r.stats.mean},
                     {"variance", r.stats.variance},
                     {"stddev", r.stats.stddev()}};
  report["pairs_used"] = r.pairs_used;
  report["pairs_raw"] = r.pairs_raw;
  report["lambda_used"] = r.lambda_used;
  report["rng"] = "xoshiro256**, trial (t, i) seeded by splitmix64 derivation";
  report["config"] = config;

  ordered_json doc_json;
  doc_json["schema_version"] = doc.schema_version;
  doc_json["tool"] = {{"name", kToolName}, {"version", doc.tool_version}};
  doc_json["created_at"] = doc.created_at;
  doc_json["image"] = {{"path", doc.image_path},
                       {"sha256", doc.image_sha256},
                       {"width", doc.image_width},
                       {"height", doc.image_height},
                       {"levels", doc.image_levels}};
  doc_json["report"] = report;
  return doc_json;
}

ReportDocument ReportFromJson(const json& j) {
  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kSchemaVersion) {
      SchemaError("unsupported schema_version " + doc.schema_version);
    }
    doc.tool_version = j.at("tool").at("version").get<std::string>();
    doc.created_at = j.at("created_at").get<std::string>();
    const json& image = j.at("image");
    doc.image_path = image.at("path").get<std::string>();
    doc.image_sha256 = image.at("sha256").get<std::string>();
    doc.image_width = image.at("width").get<std::int64_t>();
    doc.image_height = image.at("height").get<std::int64_t>();
    doc.image_levels = image.at("levels").get<std::int64_t>();

    const json& rj = j.at("report");
    EvaluationReport& r = doc.report;
    r.score = rj.at("score").get<double>();
    r.verdict = ParseEnum<Verdict>(rj.at("verdict"), &ParseVerdict, "verdict");
    r.mode = ParseEnum<EvaluationMode>(rj.at("mode"), &ParseEvaluationMode, "mode");
    r.distribution_source = ParseEnum<DistributionSource>(
        rj.at("distribution_source"), &ParseDistributionSource, "distribution_source");
    r.round_passes = rj.at("round_passes").get<std::vector<std::int64_t>>();
    if (!rj.at("interval").is_null()) {
      const json& iv = rj.at("interval");
      r.interval = CriticalInterval{iv.at("lower").get<double>(), iv.at("upper").get<double>(),
                                    iv.at("alpha").get<double>(), iv.at("pairs").get<std::int64_t>()};
    }
    r.stats.mean = rj.at("stats").at("mean").get<double>();
    r.stats.variance = rj.at("stats").at("variance").get<double>();
    r.pairs_used = rj.at("pairs_used").get<std::int64_t>();
    r.pairs_raw = rj.at("pairs_raw").get<std::int64_t>();
    r.lambda_used = rj.at("lambda_used").get<double>();

    const json& cj = rj.at("config");
    EvaluationConfig& c = r.config;
    c.alpha = cj.at("alpha").get<double>();
    c.n_tests = cj.at("n_tests").get<std::int64_t>();
    c.t_rounds = cj.at("t_rounds").get<std::int64_t>();
    if (!cj.at("pairs").is_null()) c.pairs = cj.at("pairs").get<std::int64_t>();
    if (!cj.at("lambda").is_null()) c.lambda = cj.at("lambda").get<double>();
    c.mode = ParseEnum<EvaluationMode>(cj.at("mode"), &ParseEvaluationMode, "config.mode");
    c.seed = cj.at("seed").get<std::uint64_t>();
    c.sampling = ParseEnum<PairSampling>(cj.at("sampling"), &ParsePairSampling, "config.sampling");
    c.max_offset = cj.at("max_offset").get<std::int64_t>();
    return doc;
  } catch (const json::exception& e) {
    SchemaError(e.what());
  }
}

}  // namespace imgrand::cli
