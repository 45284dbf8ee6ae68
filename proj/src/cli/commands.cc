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

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "imgrand/block_cipher.h"
#include "imgrand/cli/providers.h"
#include "imgrand/cli/report.h"
#include "imgrand/error.h"
#include "imgrand/evaluator.h"
#include "imgrand/pgm.h"
#include "imgrand/rng.h"
#include "imgrand/synth.h"
#include "imgrand/transforms.h"

namespace imgrand::cli {
namespace {

struct EvaluateOptions {
  std::string image;
  std::string mode = "shuffling";
  double alpha = 0.05;
  std::int64_t n_tests = 1000;
  std::int64_t t_rounds = 10;
  std::optional<std::int64_t> pairs;
  std::optional<double> lambda;
  std::uint64_t seed = 0;
  std::string sampling = "local";
  std::int64_t max_offset = kDefaultMaxOffset;
  std::string json_path;
};

struct StatsOptions {
  std::string image;
  std::string mode = "shuffling";
  double alpha = 0.05;
  std::optional<double> lambda;
};

struct TransformOptions {
  std::string image;
  std::string method;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> iterations;
  std::string out;
  std::string cipher = "aes";
  std::string key_hex;
};

struct SynthOptions {
  std::string pattern;
  std::int64_t width = 512;
  std::int64_t height = 512;
  std::int64_t levels = 256;
  std::int64_t period = 4;
  std::uint64_t seed = 0;
  std::string out;
};

EvaluationMode RequireMode(const std::string& text) {
  const auto mode = ParseEvaluationMode(text);
  if (!mode) {
    throw Error(ErrorCode::kInvalidArgument,
                "--mode must be 'shuffling' or 'encryption', got '" + text + "'");
  }
  return *mode;
}

std::string Fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::vector<std::uint8_t> ParseHexKey(const std::string& hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "--key must have an even number of hex digits");
  }
  std::vector<std::uint8_t> key;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const auto digit = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw Error(ErrorCode::kInvalidArgument, "--key is not hexadecimal");
    };
    key.push_back(static_cast<std::uint8_t>(digit(hex[i]) * 16 + digit(hex[i + 1])));
  }
  return key;
}

// 128-bit key derived from the seed when --key is not given.
std::vector<std::uint8_t> SeedKey(std::uint64_t seed) {
  SplitMix64 mixer(DeriveSeed(seed, {0x6b6579ULL}));
  std::vector<std::uint8_t> key;
  for (int word = 0; word < 2; ++word) {
    const std::uint64_t bits = mixer();
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
  }
  return key;
}

int CmdEvaluate(const EvaluateOptions& opts, std::ostream& out) {
  EvaluationConfig config;
  config.alpha = opts.alpha;
  config.n_tests = opts.n_tests;
  config.t_rounds = opts.t_rounds;
  config.pairs = opts.pairs;
  config.lambda = opts.lambda;
  config.mode = RequireMode(opts.mode);
  config.seed = opts.seed;
  const auto sampling = ParsePairSampling(opts.sampling);
  if (!sampling) {
    throw Error(ErrorCode::kInvalidArgument, "--sampling must be 'local' or 'uniform'");
  }
  config.sampling = *sampling;
  config.max_offset = opts.max_offset;
  config.Validate();
  const ExecutionOptions execution = ExecutionOptionsFromEnvironment();

  const auto bytes = ReadFileBytes(opts.image);
  const GrayImage image = ReadPgm(bytes);

  ReportDocument doc;
  doc.created_at = UtcTimestamp();
  doc.image_path = opts.image;
  doc.image_sha256 = Sha256Hex(bytes);
  doc.image_width = image.width();
  doc.image_height = image.height();
  doc.image_levels = image.levels();
  doc.report = RunEvaluation(image, config, execution);

  const std::string text = ToJson(doc).dump(2) + "\n";
  if (opts.json_path.empty()) {
    out << text;
  } else {
    std::ofstream file(opts.json_path, std::ios::trunc);
    if (!file || !(file << text)) {
      throw Error(ErrorCode::kIo, "cannot write " + opts.json_path);
    }
    out << "score " << FormatScore(doc.report.score, config.n_tests) << "  "
        << ToString(doc.report.verdict) << "\n";
  }
  return doc.report.verdict == Verdict::kIndistinguishableFromRandom ? kExitPass
                                                                     : kExitFail;
}

int CmdStats(const StatsOptions& opts, std::ostream& out) {
  EvaluationConfig config;
  config.alpha = opts.alpha;
  config.lambda = opts.lambda;
  config.mode = RequireMode(opts.mode);
  config.Validate();
  const GrayImage image = ReadPgmFile(opts.image);
  const TestPlan plan = PlanEvaluation(image, config);

  out << "mu, sigma, m*, interval\n";
  if (plan.degenerate()) {
    out << Fixed2(plan.stats.mean) << ", " << Fixed2(plan.stats.stddev())
        << ", -, -\n"
        << "degenerate image: pixel-difference variance is zero, the test is "
           "undefined and the image is trivially distinguishable\n";
    return kExitFail;
  }
  out << Fixed2(plan.stats.mean) << ", " << Fixed2(plan.stats.stddev()) << ", "
      << plan.pairs_used << ", " << Fixed2(plan.interval->lower) << "~"
      << Fixed2(plan.interval->upper) << "\n";
  if (plan.pairs_raw != plan.pairs_used) {
    out << "note: loss-optimal m* = " << plan.pairs_raw << " clamped to "
        << plan.pairs_used << "\n";
  }
  return kExitPass;
}

int CmdTransform(const TransformOptions& opts, std::ostream& out) {
  const GrayImage image = ReadPgmFile(opts.image);
  TransformKey key;
  key.seed = opts.seed;
  key.iterations = opts.iterations;

  GrayImage result = image;
  if (opts.method == "rpm") {
    result = RpmShuffle(image, key);
  } else if (opts.method == "rcs") {
    result = RcsShuffle(image, key);
  } else if (opts.method == "arnold") {
    result = ArnoldShuffle(image, key);
  } else if (opts.method == "lme") {
    result = LogisticEncrypt(image, key);
  } else if (opts.method == "ecb" || opts.method == "cbc") {
    const auto cipher = MakeBlockCipher(opts.cipher);
    if (!cipher) {
      throw Error(ErrorCode::kFeatureNotAvailable,
                  "block cipher '" + opts.cipher + "' is not available in this build");
    }
    key.cipher_key = opts.key_hex.empty() ? SeedKey(opts.seed) : ParseHexKey(opts.key_hex);
    const BlockMode mode = opts.method == "ecb" ? BlockMode::kEcb : BlockMode::kCbc;
    const BlockCipherResult encrypted = BlockCipherEncrypt(image, mode, cipher.get(), key);
    result = encrypted.image;
    if (encrypted.padding > 0) {
      out << "note: " << encrypted.padding
          << " zero padding bytes were encrypted and dropped from the output image\n";
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "--method must be one of rpm, rcs, arnold, lme, ecb, cbc");
  }
  WritePgmFile(opts.out, result);
  return kExitPass;
}

int CmdSynth(const SynthOptions& opts) {
  GrayImage image = GrayImage::Filled(1, 1, 256, 0);
  if (opts.pattern == "ramp") {
    image = SynthStructured(Pattern::kRamp, opts.levels, opts.width, opts.height);
  } else if (opts.pattern == "checker") {
    image = SynthStructured(Pattern::kChecker, opts.levels, opts.width, opts.height);
  } else if (opts.pattern == "stripes") {
    image = SynthStructured(Pattern::kStripes, opts.levels, opts.width, opts.height,
                            opts.period);
  } else if (opts.pattern == "uniform") {
    image = SynthIid(opts.levels, opts.width, opts.height,
                     IntensityDistribution::Uniform(opts.levels), opts.seed);
  } else if (opts.pattern == "constant") {
    image = GrayImage::Filled(opts.width, opts.height, opts.levels,
                              static_cast<Pixel>(opts.seed % static_cast<std::uint64_t>(opts.levels)));
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "--pattern must be one of ramp, checker, stripes, uniform, constant");
  }
  WritePgmFile(opts.out, image);
  return kExitPass;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"imgrand: pixel-difference randomness test for shuffled and encrypted images"};
  app.name("imgrand");
  app.require_subcommand(1);

  EvaluateOptions eval;
  auto* evaluate = app.add_subcommand("evaluate", "Run the randomized pixel-difference test");
  evaluate->add_option("--image", eval.image, "PGM image to test")->required();
  evaluate->add_option("--mode", eval.mode, "shuffling or encryption")->capture_default_str();
  evaluate->add_option("--alpha", eval.alpha, "Significance level")->capture_default_str();
  evaluate->add_option("--n", eval.n_tests, "Tests per round (N)")->capture_default_str();
  evaluate->add_option("--t", eval.t_rounds, "Rounds (T)")->capture_default_str();
  evaluate->add_option("--m", eval.pairs, "Pixel pairs per test (default: loss-optimal m*)");
  evaluate->add_option("--lambda", eval.lambda, "Loss weight (default: mean / L)");
  evaluate->add_option("--seed", eval.seed, "Random seed")->capture_default_str();
  evaluate->add_option("--sampling", eval.sampling, "Pair configuration: local or uniform")
      ->capture_default_str();
  evaluate->add_option("--max-offset", eval.max_offset, "Largest pair offset for local sampling")
      ->capture_default_str();
  evaluate->add_option("--json", eval.json_path, "Write the JSON report here instead of stdout");

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print mu, sigma, m* and the critical interval");
  stats_cmd->add_option("--image", stats.image, "PGM image")->required();
  stats_cmd->add_option("--mode", stats.mode, "shuffling or encryption")->capture_default_str();
  stats_cmd->add_option("--alpha", stats.alpha, "Significance level")->capture_default_str();
  stats_cmd->add_option("--lambda", stats.lambda, "Loss weight (default: mean / L)");

  TransformOptions transform;
  auto* transform_cmd = app.add_subcommand("transform", "Shuffle or encrypt an image");
  transform_cmd->add_option("--image", transform.image, "Input PGM")->required();
  transform_cmd->add_option("--method", transform.method, "rpm, rcs, arnold, lme, ecb or cbc")
      ->required();
  transform_cmd->add_option("--seed", transform.seed, "Key seed")->capture_default_str();
  transform_cmd->add_option("--iterations", transform.iterations, "Arnold map rounds");
  transform_cmd->add_option("--out", transform.out, "Output PGM")->required();
  transform_cmd->add_option("--cipher", transform.cipher, "Block cipher provider for ecb/cbc")
      ->capture_default_str();
  transform_cmd->add_option("--key", transform.key_hex,
                            "Block cipher key as hex (default: derived from --seed)");

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic test image");
  synth_cmd->add_option("--pattern", synth.pattern, "ramp, checker, stripes, uniform or constant")
      ->required();
  synth_cmd->add_option("--width", synth.width)->capture_default_str();
  synth_cmd->add_option("--height", synth.height)->capture_default_str();
  synth_cmd->add_option("--levels", synth.levels)->capture_default_str();
  synth_cmd->add_option("--period", synth.period, "Stripe period in rows")->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Seed (uniform) or value (constant)")
      ->capture_default_str();
  synth_cmd->add_option("--out", synth.out, "Output PGM")->required();

  std::vector<const char*> argv{"imgrand"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*evaluate) return CmdEvaluate(eval, out);
    if (*stats_cmd) return CmdStats(stats, out);
    if (*transform_cmd) return CmdTransform(transform, out);
    if (*synth_cmd) return CmdSynth(synth);
  } catch (const Error& e) {
    err << "imgrand: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "imgrand: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace imgrand::cli
