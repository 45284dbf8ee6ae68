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

#ifndef IMGRAND_CLI_REPORT_H_
#define IMGRAND_CLI_REPORT_H_

// JSON report document written by `imgrand evaluate`. See README.md for the
// schema.

#include <string>

#include "imgrand/evaluator.h"
#include "json.hpp"

namespace imgrand::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolName = "imgrand";
inline constexpr const char* kToolVersion = "0.1.0";

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string created_at;  // ISO 8601 UTC
  std::string image_path;
  std::string image_sha256;
  std::int64_t image_width = 0;
  std::int64_t image_height = 0;
  std::int64_t image_levels = 0;
  EvaluationReport report;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// Score with enough decimals to show 1/N granularity, never fewer than 3.
std::string FormatScore(double score, std::int64_t n_tests);

std::string UtcTimestamp();

nlohmann::ordered_json ToJson(const ReportDocument& doc);

// Throws kParse on schema mismatch.
ReportDocument ReportFromJson(const nlohmann::json& json);

}  // namespace imgrand::cli

#endif  // IMGRAND_CLI_REPORT_H_
