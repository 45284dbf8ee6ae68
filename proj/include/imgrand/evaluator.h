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

#ifndef IMGRAND_EVALUATOR_H_
#define IMGRAND_EVALUATOR_H_

// Randomized (alpha, N, m, T) pixel-difference test.
//
// The null statistics (mu, sigma^2) come from the image's own histogram in
// shuffling mode and from the uniform distribution in encryption mode. Each
// of T rounds runs N Z-tests; a test passes when the mean absolute
// difference of m disjoint random pairs lies in the closed critical interval.
// The score is max_t(r_t) / N.
//
// Trial (t, i) draws from a xoshiro256** stream seeded with
// DeriveSeed(seed, {t, i}), so a report depends only on the image and the
// configuration, never on the thread count.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "imgrand/distribution.h"
#include "imgrand/image.h"
#include "imgrand/pair_sampling.h"

namespace imgrand {

enum class EvaluationMode { kShuffling, kEncryption };
enum class Verdict { kIndistinguishableFromRandom, kDistinguishable, kDegenerateImage };
enum class DistributionSource { kSampleHistogram, kUniform };

struct EvaluationConfig {
  double alpha = 0.05;
  std::int64_t n_tests = 1000;
  std::int64_t t_rounds = 10;
  // Pair count m; the loss-optimal m* when absent.
  std::optional<std::int64_t> pairs;
  // Loss weight; mu/L (shuffling) or mu_e/L (encryption) when absent.
  std::optional<double> lambda;
  EvaluationMode mode = EvaluationMode::kShuffling;
  std::uint64_t seed = 0;
  PairSampling sampling = PairSampling::kLocal;
  std::int64_t max_offset = kDefaultMaxOffset;

  // Throws kInvalidArgument on out-of-range fields.
  void Validate() const;

  friend bool operator==(const EvaluationConfig&, const EvaluationConfig&) = default;
};

struct EvaluationReport {
  double score = 0.0;
  std::vector<std::int64_t> round_passes;
  // Absent for degenerate images.
  std::optional<CriticalInterval> interval;
  DiffStats stats;
  std::int64_t pairs_used = 0;
  std::int64_t pairs_raw = 0;
  double lambda_used = 0.0;
  EvaluationMode mode = EvaluationMode::kShuffling;
  Verdict verdict = Verdict::kDistinguishable;
  DistributionSource distribution_source = DistributionSource::kSampleHistogram;
  EvaluationConfig config;

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

// Everything fixed before the first trial: null statistics, pair count and
// critical interval. interval is absent for degenerate (zero-variance) images.
struct TestPlan {
  DiffStats stats;
  DistributionSource distribution_source = DistributionSource::kSampleHistogram;
  double lambda = 0.0;
  std::int64_t pairs_raw = 0;
  std::int64_t pairs_used = 0;
  std::optional<CriticalInterval> interval;

  bool degenerate() const noexcept { return !interval.has_value(); }
};

// Validates the configuration and image size as RunEvaluation does.
TestPlan PlanEvaluation(const GrayImage& image, const EvaluationConfig& config);

struct ExecutionOptions {
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Reads IMGRAND_THREADS (unset, empty or 0 means automatic).
ExecutionOptions ExecutionOptionsFromEnvironment();

// Throws kDomainTooSmall when |Omega| < 60 or m does not fit, and
// kInvalidArgument for an invalid configuration. A zero-variance image yields
// verdict kDegenerateImage with score 0 rather than an exception.
EvaluationReport RunEvaluation(const GrayImage& image,
                               const EvaluationConfig& config,
                               const ExecutionOptions& options = {});

// RunEvaluation with the mode forced to encryption.
EvaluationReport EvaluateEncryption(const GrayImage& image,
                                    EvaluationConfig config,
                                    const ExecutionOptions& options = {});

std::string_view ToString(EvaluationMode mode);
std::string_view ToString(Verdict verdict);
std::string_view ToString(DistributionSource source);
std::string_view ToString(PairSampling sampling);

std::optional<EvaluationMode> ParseEvaluationMode(std::string_view text);
std::optional<Verdict> ParseVerdict(std::string_view text);
std::optional<DistributionSource> ParseDistributionSource(std::string_view text);
std::optional<PairSampling> ParsePairSampling(std::string_view text);

}  // namespace imgrand

#endif  // IMGRAND_EVALUATOR_H_
