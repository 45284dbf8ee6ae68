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

#include "imgrand/distribution.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "imgrand/error.h"
#include "imgrand/special_functions.h"

namespace imgrand {
namespace {

constexpr double kNormalizationTolerance = 1e-12;

void ValidateProbabilities(const std::vector<double>& probs, const char* what) {
  if (probs.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + ": at least two levels are required");
  }
  long double total = 0.0L;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (!(probs[k] >= 0.0) || !std::isfinite(probs[k])) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + ": probability at index " +
                      std::to_string(k) + " is negative or not finite");
    }
    total += probs[k];
  }
  if (std::fabs(static_cast<double>(total) - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + ": probabilities sum to " +
                    std::to_string(static_cast<double>(total)) +
                    " instead of 1");
  }
}

void RequireLevels(std::int64_t levels) {
  if (levels < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "at least two intensity levels are required, got " +
                    std::to_string(levels));
  }
}

void RequireUsableVariance(const DiffStats& stats) {
  if (stats.variance == 0.0) {
    throw Error(ErrorCode::kDegenerateImage,
                "pixel-difference variance is zero; the Z statistic is "
                "undefined for a constant image");
  }
  if (!(stats.variance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "variance must be positive");
  }
}

}  // namespace

IntensityDistribution::IntensityDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  ValidateProbabilities(probs_, "intensity distribution");
}

IntensityDistribution IntensityDistribution::Uniform(std::int64_t levels) {
  RequireLevels(levels);
  return IntensityDistribution(std::vector<double>(
      static_cast<std::size_t>(levels), 1.0 / static_cast<double>(levels)));
}

DiffDistribution::DiffDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  ValidateProbabilities(probs_, "difference distribution");
}

double DiffStats::stddev() const { return std::sqrt(variance); }

DiffDistribution ComputeDiffDistribution(const IntensityDistribution& p) {
  const auto probs = p.probs();
  const std::size_t levels = probs.size();

  // Only occupied levels contribute; natural images rarely use all of them.
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < levels; ++k) {
    if (probs[k] > 0.0) support.push_back(k);
  }

  std::vector<long double> acc(levels, 0.0L);
  for (std::size_t i = 0; i < support.size(); ++i) {
    const std::size_t k = support[i];
    const long double pk = probs[k];
    acc[0] += pk * pk;
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t lower = support[j];
      acc[k - lower] += 2.0L * probs[lower] * pk;
    }
  }
  std::vector<double> out(levels);
  std::transform(acc.begin(), acc.end(), out.begin(),
                 [](long double v) { return static_cast<double>(v); });
  return DiffDistribution(std::move(out));
}

DiffDistribution UniformDiffDistribution(std::int64_t levels) {
  RequireLevels(levels);
  const double l = static_cast<double>(levels);
  std::vector<double> out(static_cast<std::size_t>(levels));
  out[0] = 1.0 / l;
  for (std::int64_t d = 1; d < levels; ++d) {
    out[static_cast<std::size_t>(d)] =
        2.0 * static_cast<double>(levels - d) / (l * l);
  }
  return DiffDistribution(std::move(out));
}

DiffStats ComputeDiffStats(const DiffDistribution& pd) {
  long double first = 0.0L;
  long double second = 0.0L;
  const auto probs = pd.probs();
  for (std::size_t d = 0; d < probs.size(); ++d) {
    const long double dd = static_cast<long double>(d);
    first += dd * probs[d];
    second += dd * dd * probs[d];
  }
  const long double variance = second - first * first;
  DiffStats stats{static_cast<double>(first), static_cast<double>(variance)};
  if (stats.variance < 0.0) {
    const double tolerance =
        kNormalizationTolerance * std::max(1.0, static_cast<double>(second));
    if (stats.variance < -tolerance) {
      throw Error(ErrorCode::kInvalidArgument,
                  "difference distribution produced a negative variance");
    }
    stats.variance = 0.0;
  }
  return stats;
}

DiffStats DiffStatsFromIntensity(const IntensityDistribution& p) {
  const auto probs = p.probs();
  long double cdf = 0.0L;
  long double mean_abs = 0.0L;
  long double first = 0.0L;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    first += static_cast<long double>(k) * probs[k];
    if (k + 1 < probs.size()) {
      cdf += probs[k];
      mean_abs += 2.0L * cdf * (1.0L - cdf);
    }
  }
  long double centered = 0.0L;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const long double dev = static_cast<long double>(k) - first;
    centered += dev * dev * probs[k];
  }
  const long double variance = 2.0L * centered - mean_abs * mean_abs;
  return DiffStats{static_cast<double>(mean_abs),
                   std::max(0.0, static_cast<double>(variance))};
}

DiffStats NullDiffStats(const IntensityDistribution& p) {
  const auto probs = p.probs();
  const auto occupied = static_cast<std::size_t>(
      std::count_if(probs.begin(), probs.end(), [](double v) { return v > 0.0; }));
  if (occupied <= kDirectSupportLimit) {
    return ComputeDiffStats(ComputeDiffDistribution(p));
  }
  return DiffStatsFromIntensity(p);
}

DiffStats UniformStats(std::int64_t levels) {
  RequireLevels(levels);
  const double l = static_cast<double>(levels);
  const double l2 = l * l;
  return DiffStats{(l2 - 1.0) / (3.0 * l), (l2 - 1.0) * (l2 + 2.0) / (18.0 * l2)};
}

CriticalInterval ComputeCriticalValues(const DiffStats& stats, std::int64_t m,
                                       double alpha) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pair count must be >= 1");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "significance level must lie in (0, 1)");
  }
  RequireUsableVariance(stats);
  // InverseNormalCdf(alpha / 2) is negative, so this is the upper half-width.
  const double half_width = -InverseNormalCdf(alpha / 2.0) * stats.stddev() /
                            std::sqrt(static_cast<double>(m));
  return CriticalInterval{stats.mean - half_width, stats.mean + half_width,
                          alpha, m};
}

double ZStatistic(double sample_mean, const DiffStats& stats, std::int64_t m) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pair count must be >= 1");
  }
  RequireUsableVariance(stats);
  return (sample_mean - stats.mean) /
         (stats.stddev() / std::sqrt(static_cast<double>(m)));
}

double PairCountLoss(const DiffStats& stats, std::int64_t domain_size,
                     double lambda, std::int64_t m) {
  const double md = static_cast<double>(m);
  return stats.variance / md +
         lambda * md * md / static_cast<double>(domain_size);
}

PairCount OptimalPairCount(const DiffStats& stats, std::int64_t domain_size,
                           double lambda) {
  if (domain_size < 2 * kMinPairs) {
    throw Error(ErrorCode::kDomainTooSmall,
                "image has " + std::to_string(domain_size) +
                    " pixels; at least " + std::to_string(2 * kMinPairs) +
                    " are needed for " + std::to_string(kMinPairs) +
                    " disjoint pairs");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be positive");
  }
  RequireUsableVariance(stats);

  PairCount count;
  const double cube = stats.variance * static_cast<double>(domain_size) /
                      (2.0 * lambda);
  count.raw = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(std::cbrt(cube))));
  count.used = std::clamp(count.raw, kMinPairs, domain_size / 2);
  return count;
}

}  // namespace imgrand
