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

#ifndef IMGRAND_DISTRIBUTION_H_
#define IMGRAND_DISTRIBUTION_H_

// Null-model statistics for the pixel-difference test.
//
// Under the null hypothesis every pixel is i.i.d. with the image's intensity
// distribution p. The absolute difference of two distinct pixels then has
// the distribution
//
//   P_0 = sum_k p_k^2,   P_d = 2 sum_{k=d}^{L-1} p_{k-d} p_k   (d >= 1),
//
// and the mean of m disjoint pair differences is approximately
// N(mu, sigma^2 / m) for m >= 30.

#include <cstdint>
#include <span>
#include <vector>

namespace imgrand {

// Normalized histogram over L intensity levels.
class IntensityDistribution {
 public:
  // Throws kInvalidArgument unless probs has at least two entries, all
  // non-negative, summing to 1 within 1e-12.
  explicit IntensityDistribution(std::vector<double> probs);

  static IntensityDistribution Uniform(std::int64_t levels);

  std::int64_t levels() const noexcept {
    return static_cast<std::int64_t>(probs_.size());
  }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t k) const noexcept { return probs_[k]; }

 private:
  std::vector<double> probs_;
};

// Distribution of |x_l - x_k| over d in [0, L-1].
class DiffDistribution {
 public:
  explicit DiffDistribution(std::vector<double> probs);

  std::int64_t levels() const noexcept {
    return static_cast<std::int64_t>(probs_.size());
  }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t d) const noexcept { return probs_[d]; }

 private:
  std::vector<double> probs_;
};

struct DiffStats {
  double mean = 0.0;
  double variance = 0.0;

  double stddev() const;

  friend bool operator==(const DiffStats&, const DiffStats&) = default;
};

// Two-sided acceptance region for the sample mean difference.
struct CriticalInterval {
  double lower = 0.0;
  double upper = 0.0;
  double alpha = 0.0;
  std::int64_t pairs = 0;

  // Closed-interval membership.
  bool Contains(double sample_mean) const noexcept {
    return sample_mean >= lower && sample_mean <= upper;
  }

  friend bool operator==(const CriticalInterval&, const CriticalInterval&) = default;
};

DiffDistribution ComputeDiffDistribution(const IntensityDistribution& p);

// Triangular difference distribution of a uniform image with `levels` levels.
DiffDistribution UniformDiffDistribution(std::int64_t levels);

// Mean and variance of a difference distribution. Variance that is negative
// only through rounding (> -1e-12) is clamped to zero.
DiffStats ComputeDiffStats(const DiffDistribution& pd);

// Same moments as ComputeDiffStats(ComputeDiffDistribution(p)) in O(L), via
// E|X-Y| = 2 sum_t F(t)(1-F(t)) and E[(X-Y)^2] = 2 Var(X).
DiffStats DiffStatsFromIntensity(const IntensityDistribution& p);

// Null-model moments for an image histogram. Goes through the full
// difference distribution when at most kDirectSupportLimit levels are
// occupied and through DiffStatsFromIntensity otherwise (16-bit images).
inline constexpr std::size_t kDirectSupportLimit = 4096;
DiffStats NullDiffStats(const IntensityDistribution& p);

// Closed forms mu_e = (L^2-1)/(3L), sigma_e^2 = (L^2-1)(L^2+2)/(18L^2).
DiffStats UniformStats(std::int64_t levels);

// Throws kDegenerateImage when stats.variance == 0.
CriticalInterval ComputeCriticalValues(const DiffStats& stats, std::int64_t m,
                                       double alpha);

double ZStatistic(double sample_mean, const DiffStats& stats, std::int64_t m);

// Loss Psi(m) = sigma^2/m + lambda m^2/|Omega| trading test variance for
// spatial localization.
double PairCountLoss(const DiffStats& stats, std::int64_t domain_size,
                     double lambda, std::int64_t m);

struct PairCount {
  std::int64_t raw = 0;   // ceil(cbrt(sigma^2 |Omega| / (2 lambda)))
  std::int64_t used = 0;  // raw clamped to [30, floor(|Omega|/2)]
};

inline constexpr std::int64_t kMinPairs = 30;

// Loss-optimal number of disjoint pairs. Throws kDegenerateImage for zero
// variance and kDomainTooSmall when |Omega| < 60.
PairCount OptimalPairCount(const DiffStats& stats, std::int64_t domain_size,
                           double lambda);

}  // namespace imgrand

#endif  // IMGRAND_DISTRIBUTION_H_
