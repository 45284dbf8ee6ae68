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

#include "imgrand/evaluator.h"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "imgrand/error.h"
#include "imgrand/rng.h"

namespace imgrand {
namespace {

constexpr std::int64_t kTrialsPerClaim = 32;

struct TrialPlan {
  const GrayImage* image;
  const EvaluationConfig* config;
  CriticalInterval interval;
  std::int64_t pairs;
};

void RunTrials(const TrialPlan& plan, std::atomic<std::int64_t>& next,
               std::vector<std::uint8_t>& passed) {
  const std::int64_t n_tests = plan.config->n_tests;
  const auto total = static_cast<std::int64_t>(passed.size());
  PairSampler sampler(plan.image->domain(), plan.config->sampling,
                      plan.config->max_offset);
  PairSample sample;
  for (;;) {
    const std::int64_t begin = next.fetch_add(kTrialsPerClaim);
    if (begin >= total) return;
    const std::int64_t end = std::min(total, begin + kTrialsPerClaim);
    for (std::int64_t trial = begin; trial < end; ++trial) {
      const auto round = static_cast<std::uint64_t>(trial / n_tests);
      const auto test = static_cast<std::uint64_t>(trial % n_tests);
      Xoshiro256StarStar rng(DeriveSeed(plan.config->seed, {round, test}));
      sampler.Sample(plan.pairs, rng, sample);
      assert(IsValidPairSample(sample, plan.image->domain()));
      const double mean = MeanAbsDifference(*plan.image, sample);
      passed[static_cast<std::size_t>(trial)] = plan.interval.Contains(mean) ? 1 : 0;
    }
  }
}

unsigned ResolveThreads(const ExecutionOptions& options, std::int64_t trials) {
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t useful = (trials + kTrialsPerClaim - 1) / kTrialsPerClaim;
  return static_cast<unsigned>(std::clamp<std::int64_t>(threads, 1, useful));
}

}  // namespace

void EvaluationConfig::Validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1)");
  }
  if (n_tests < 1) {
    throw Error(ErrorCode::kInvalidArgument, "test count N must be >= 1");
  }
  if (t_rounds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "round count T must be >= 1");
  }
  if (pairs && *pairs < kMinPairs) {
    throw Error(ErrorCode::kInvalidArgument,
                "pair count m must be >= " + std::to_string(kMinPairs));
  }
  if (lambda && !(*lambda > 0.0 && std::isfinite(*lambda))) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be positive");
  }
  if (max_offset < 1) {
    throw Error(ErrorCode::kInvalidArgument, "maximum pair offset must be >= 1");
  }
}

ExecutionOptions ExecutionOptionsFromEnvironment() {
  ExecutionOptions options;
  const char* value = std::getenv("IMGRAND_THREADS");
  if (value == nullptr || *value == '\0') return options;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("IMGRAND_THREADS must be a non-negative integer, got '") +
                    value + "'");
  }
  options.threads = static_cast<unsigned>(std::min<long>(parsed, 4096));
  return options;
}

TestPlan PlanEvaluation(const GrayImage& image, const EvaluationConfig& config) {
  config.Validate();
  const std::int64_t domain_size = image.size();
  if (domain_size < 2 * kMinPairs) {
    throw Error(ErrorCode::kDomainTooSmall,
                "image has " + std::to_string(domain_size) +
                    " pixels; at least " + std::to_string(2 * kMinPairs) +
                    " are required");
  }
  if (config.pairs && 2 * *config.pairs > domain_size) {
    throw Error(ErrorCode::kDomainTooSmall,
                "pair count " + std::to_string(*config.pairs) +
                    " exceeds half the image size");
  }

  TestPlan plan;
  if (config.mode == EvaluationMode::kEncryption) {
    plan.distribution_source = DistributionSource::kUniform;
    plan.stats = UniformStats(image.levels());
  } else {
    plan.distribution_source = DistributionSource::kSampleHistogram;
    plan.stats = NullDiffStats(Histogram(image));
  }
  plan.lambda = config.lambda.value_or(plan.stats.mean /
                                       static_cast<double>(image.levels()));
  if (plan.stats.variance == 0.0) return plan;

  if (config.pairs) {
    plan.pairs_raw = plan.pairs_used = *config.pairs;
  } else {
    const PairCount count = OptimalPairCount(plan.stats, domain_size, plan.lambda);
    plan.pairs_raw = count.raw;
    plan.pairs_used = count.used;
  }
  plan.interval = ComputeCriticalValues(plan.stats, plan.pairs_used, config.alpha);
  return plan;
}

EvaluationReport RunEvaluation(const GrayImage& image,
                               const EvaluationConfig& config,
                               const ExecutionOptions& options) {
  const TestPlan test_plan = PlanEvaluation(image, config);

  EvaluationReport report;
  report.config = config;
  report.mode = config.mode;
  report.round_passes.assign(static_cast<std::size_t>(config.t_rounds), 0);
  report.distribution_source = test_plan.distribution_source;
  report.stats = test_plan.stats;
  report.lambda_used = test_plan.lambda;
  report.pairs_raw = test_plan.pairs_raw;
  report.pairs_used = test_plan.pairs_used;
  report.interval = test_plan.interval;
  if (test_plan.degenerate()) {
    report.verdict = Verdict::kDegenerateImage;
    report.score = 0.0;
    return report;
  }

  const std::int64_t trials = config.t_rounds * config.n_tests;
  std::vector<std::uint8_t> passed(static_cast<std::size_t>(trials), 0);
  const TrialPlan plan{&image, &config, *report.interval, report.pairs_used};
  std::atomic<std::int64_t> next{0};
  const unsigned threads = ResolveThreads(options, trials);
  if (threads == 1) {
    RunTrials(plan, next, passed);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] { RunTrials(plan, next, passed); });
    }
  }

  for (std::int64_t trial = 0; trial < trials; ++trial) {
    report.round_passes[static_cast<std::size_t>(trial / config.n_tests)] +=
        passed[static_cast<std::size_t>(trial)];
  }
  const std::int64_t best =
      *std::max_element(report.round_passes.begin(), report.round_passes.end());
  report.score = static_cast<double>(best) / static_cast<double>(config.n_tests);
  // score >= 1 - alpha, compared in counts to stay clear of rounding.
  const auto needed = static_cast<std::int64_t>(std::ceil(
      (1.0 - config.alpha) * static_cast<double>(config.n_tests) - 1e-9));
  report.verdict = best >= needed ? Verdict::kIndistinguishableFromRandom
                                  : Verdict::kDistinguishable;
  return report;
}

EvaluationReport EvaluateEncryption(const GrayImage& image,
                                    EvaluationConfig config,
                                    const ExecutionOptions& options) {
  config.mode = EvaluationMode::kEncryption;
  return RunEvaluation(image, config, options);
}

std::string_view ToString(EvaluationMode mode) {
  return mode == EvaluationMode::kShuffling ? "shuffling" : "encryption";
}

std::string_view ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kIndistinguishableFromRandom:
      return "indistinguishable_from_random";
    case Verdict::kDistinguishable:
      return "distinguishable";
    case Verdict::kDegenerateImage:
      return "degenerate_image";
  }
  return "unknown";
}

std::string_view ToString(DistributionSource source) {
  return source == DistributionSource::kSampleHistogram ? "sample_histogram"
                                                        : "uniform";
}

std::string_view ToString(PairSampling sampling) {
  return sampling == PairSampling::kLocal ? "local" : "uniform";
}

std::optional<EvaluationMode> ParseEvaluationMode(std::string_view text) {
  if (text == "shuffling") return EvaluationMode::kShuffling;
  if (text == "encryption") return EvaluationMode::kEncryption;
  return std::nullopt;
}

std::optional<Verdict> ParseVerdict(std::string_view text) {
  for (Verdict v : {Verdict::kIndistinguishableFromRandom,
                    Verdict::kDistinguishable, Verdict::kDegenerateImage}) {
    if (text == ToString(v)) return v;
  }
  return std::nullopt;
}

std::optional<DistributionSource> ParseDistributionSource(std::string_view text) {
  if (text == "sample_histogram") return DistributionSource::kSampleHistogram;
  if (text == "uniform") return DistributionSource::kUniform;
  return std::nullopt;
}

std::optional<PairSampling> ParsePairSampling(std::string_view text) {
  if (text == "local") return PairSampling::kLocal;
  if (text == "uniform") return PairSampling::kUniform;
  return std::nullopt;
}

}  // namespace imgrand
