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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "imgrand/block_cipher.h"
#include "imgrand/cli/providers.h"
#include "imgrand/distribution.h"
#include "imgrand/evaluator.h"
#include "imgrand/rng.h"
#include "imgrand/special_functions.h"
#include "imgrand/synth.h"
#include "imgrand/transforms.h"
#include "oracles.h"

namespace imgrand {
namespace {

int failures = 0;

void Report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

bool Near(double actual, double expected, double tol) {
  return std::fabs(actual - expected) <= tol;
}

void UniformStatsTable() {
  struct Row {
    std::int64_t levels;
    double mean, stddev;
  };
  bool ok = true;
  std::string detail;
  for (Row row : {Row{2, 0.500, 0.500}, Row{256, 85.332, 60.340},
                  Row{65536, 21845.333, 15446.983}}) {
    const DiffStats s = UniformStats(row.levels);
    ok &= Near(s.mean, row.mean, 5e-4) && Near(s.stddev(), row.stddev, 5e-4);
    detail += Fmt("L=%.0f (%.3f, %.3f) ", static_cast<double>(row.levels), s.mean, s.stddev());
  }
  Report(1, ok, "uniform null moments", detail);
}

void EncryptionPlans() {
  struct Row {
    std::int64_t side, m;
    double lower, upper;
  };
  bool ok = true;
  std::string detail;
  const DiffStats s = UniformStats(256);
  const double lambda = s.mean / 256.0;
  for (Row row : {Row{256, 711, 80.90, 89.77}, Row{512, 1128, 81.81, 88.85},
                  Row{1024, 1790, 82.54, 88.13}}) {
    const PairCount m = OptimalPairCount(s, row.side * row.side, lambda);
    const CriticalInterval ci = ComputeCriticalValues(s, m.used, 0.05);
    ok &= m.used == row.m && Near(ci.lower, row.lower, 0.005) &&
          Near(ci.upper, row.upper, 0.005);
    detail += Fmt("%.0f:[%.2f, %.2f] ", static_cast<double>(m.used), ci.lower, ci.upper);
  }
  Report(2, ok, "optimal pair counts and critical intervals", detail);
}

void TypeOneConstants() {
  const double tail = BinomialTail(1000, 0.95, 949);
  const double bound = TypeOneErrorBound(0.05, 1000, 10);
  Report(3, Near(tail, 0.4625, 1e-4) && bound < 5e-4, "type-I constants",
         Fmt("tail=%.6f bound=%.3e", tail, bound));
}

void DiffDistributionOracle() {
  Xoshiro256StarStar rng(0xd1ff);
  double worst = 0.0;
  double worst_sum = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t levels = 2 + rng.Below(15);
    std::vector<double> p(levels);
    double total = 0.0;
    for (double& v : p) total += v = rng.Uniform01() < 0.2 ? 0.0 : rng.Uniform01();
    if (total == 0.0) p[0] = total = 1.0;
    for (double& v : p) v /= total;
    const DiffDistribution pd = ComputeDiffDistribution(IntensityDistribution(p));
    const std::vector<double> oracle = testing::BruteForceDiffDistribution(p);
    double sum = 0.0;
    for (std::size_t d = 0; d < levels; ++d) {
      worst = std::max(worst, std::fabs(pd[d] - oracle[d]));
      sum += pd[d];
    }
    worst_sum = std::max(worst_sum, std::fabs(sum - 1.0));
  }
  Report(4, worst <= 1e-12 && worst_sum <= 1e-12, "difference distribution vs enumeration",
         Fmt("max elementwise error %.2e, max |sum-1| %.2e", worst, worst_sum));
}

std::vector<IntensityDistribution> NullHistograms() {
  std::vector<double> skew(256), bimodal(256), sparse(256, 0.0);
  for (int k = 0; k < 256; ++k) {
    skew[k] = std::exp(-k / 40.0);
    bimodal[k] = std::exp(-0.5 * std::pow((k - 60) / 15.0, 2)) +
                 0.6 * std::exp(-0.5 * std::pow((k - 190) / 25.0, 2));
  }
  for (int k = 0; k < 256; k += 17) sparse[k] = 1.0 + (k % 3);
  std::vector<IntensityDistribution> out;
  for (auto* p : {&skew, &bimodal, &sparse}) {
    double total = 0.0;
    for (double v : *p) total += v;
    for (double& v : *p) v /= total;
    out.emplace_back(*p);
  }
  return out;
}

void NullCalibration() {
  const auto histograms = NullHistograms();
  int passing = 0;
  double passes = 0.0;
  double trials = 0.0;
  for (int i = 0; i < 50; ++i) {
    const GrayImage image =
        SynthIid(256, 512, 512, histograms[static_cast<std::size_t>(i % 3)],
                 DeriveSeed(5, {static_cast<std::uint64_t>(i)}));
    EvaluationConfig config;
    config.seed = static_cast<std::uint64_t>(i);
    const EvaluationReport report = RunEvaluation(image, config);
    if (report.score >= 0.95) ++passing;
    for (auto r : report.round_passes) passes += static_cast<double>(r);
    trials += static_cast<double>(config.t_rounds * config.n_tests);
  }
  const double rate = passes / trials;
  Report(5, passing >= 49 && Near(rate, 0.95, 0.01), "calibration on i.i.d. images",
         Fmt("%.0f/50 score >= 0.95, pooled pass rate %.4f", passing, rate));
}

TransformKey Key(std::uint64_t seed) {
  TransformKey key;
  key.seed = seed;
  return key;
}

double ShufflingScore(const GrayImage& image) {
  return RunEvaluation(image, EvaluationConfig{}).score;
}

void Discrimination() {
  bool ok = true;
  std::string detail;
  GrayImage stripes = SynthStructured(Pattern::kStripes, 256, 512, 512);
  for (Pattern pattern : {Pattern::kRamp, Pattern::kChecker, Pattern::kStripes}) {
    const GrayImage image = SynthStructured(pattern, 256, 512, 512);
    const double original = ShufflingScore(image);
    const double shuffled = ShufflingScore(RpmShuffle(image, Key(1)));
    ok &= original < 0.95 && shuffled >= 0.95;
    detail += Fmt("%.3f->%.3f ", original, shuffled);
  }
  const auto aes = cli::MakeBlockCipher("aes");
  if (aes) {
    TransformKey key;
    key.seed = 1;
    key.cipher_key.assign(16, 0x2b);
    const auto ecb = BlockCipherEncrypt(stripes, BlockMode::kEcb, aes.get(), key);
    const auto cbc = BlockCipherEncrypt(stripes, BlockMode::kCbc, aes.get(), key);
    const double ecb_score = EvaluateEncryption(ecb.image, EvaluationConfig{}).score;
    const double cbc_score = EvaluateEncryption(cbc.image, EvaluationConfig{}).score;
    ok &= ecb_score < 0.95 && cbc_score >= 0.95;
    detail += Fmt("stripes ecb=%.3f cbc=%.3f", ecb_score, cbc_score);
  } else {
    detail += "block modes not checked: no cipher provider built in";
  }
  Report(6, ok, "structured images fail, shuffled pass (ramp checker stripes)", detail);
}

std::vector<Pixel> SortedPixels(const GrayImage& image) {
  std::vector<Pixel> pixels(image.pixels().begin(), image.pixels().end());
  std::sort(pixels.begin(), pixels.end());
  return pixels;
}

void TransformInvariants() {
  bool multisets = true;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GrayImage image = SynthIid(256, 64, 64, IntensityDistribution::Uniform(256), seed);
    TransformKey key = Key(seed);
    key.iterations = 1 + static_cast<std::int64_t>(seed);
    const auto sorted = SortedPixels(image);
    multisets &= SortedPixels(RpmShuffle(image, key)) == sorted &&
                 SortedPixels(RcsShuffle(image, key)) == sorted &&
                 SortedPixels(ArnoldShuffle(image, key)) == sorted;
  }
  bool bijective = true;
  for (std::int64_t n : {2, 3, 8, 64}) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::int64_t r = 0; r < n; ++r) {
      for (std::int64_t c = 0; c < n; ++c) {
        const Location out = ArnoldMap({r, c}, n);
        bijective &= out.row >= 0 && out.row < n && out.col >= 0 && out.col < n;
        seen.insert({out.row, out.col});
      }
    }
    bijective &= static_cast<std::int64_t>(seen.size()) == n * n;
  }
  int involutions = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GrayImage image = SynthIid(256, 40 + static_cast<std::int64_t>(seed), 30,
                                     IntensityDistribution::Uniform(256), 100 + seed);
    if (LogisticEncrypt(LogisticEncrypt(image, Key(seed)), Key(seed)) == image) ++involutions;
  }
  Report(7, multisets && bijective && involutions == 10, "transform invariants",
         std::string("multisets ") + (multisets ? "kept" : "broken") + ", arnold " +
             (bijective ? "bijective" : "not bijective") +
             Fmt(", lme identity on %.0f/10", involutions));
}

void ThreadDeterminism() {
  const GrayImage image = SynthIid(256, 512, 512, NullHistograms()[1], 77);
  EvaluationConfig config;
  config.seed = 123;
  ::setenv("IMGRAND_THREADS", "1", 1);
  const EvaluationReport one = RunEvaluation(image, config, ExecutionOptionsFromEnvironment());
  ::setenv("IMGRAND_THREADS", "8", 1);
  const EvaluationReport eight = RunEvaluation(image, config, ExecutionOptionsFromEnvironment());
  ::unsetenv("IMGRAND_THREADS");
  Report(8, one == eight, "thread-count determinism",
         Fmt("score %.3f with 1 thread, %.3f with 8", one.score, eight.score));
}

void QuantileAccuracy() {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    // Log-spaced into both tails plus the centre.
    const double q = i < 5 ? std::pow(10.0, -6.0 + 1.25 * i) : 1.0 - std::pow(10.0, -6.0 + 1.25 * (9 - i));
    worst = std::max(worst, std::fabs(InverseNormalCdf(q) - testing::BisectInverseNormal(q)));
  }
  Report(9, worst <= 1e-9, "inverse normal CDF vs bisection", Fmt("max error %.2e", worst));
}

}  // namespace
}  // namespace imgrand

int main() {
  using namespace imgrand;
  UniformStatsTable();
  EncryptionPlans();
  TypeOneConstants();
  DiffDistributionOracle();
  NullCalibration();
  Discrimination();
  TransformInvariants();
  ThreadDeterminism();
  QuantileAccuracy();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
