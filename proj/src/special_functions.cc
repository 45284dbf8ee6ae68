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

#include "imgrand/special_functions.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "imgrand/error.h"

namespace imgrand {
namespace {

void RequireAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "significance level must lie in (0, 1)");
  }
}

// Lower-half quantile, q in (0, 0.5].
double LowerQuantile(double q) {
  static constexpr std::array<double, 6> a = {
      -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr std::array<double, 5> b = {
      -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01};
  static constexpr std::array<double, 6> c = {
      -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr std::array<double, 4> d = {
      7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00};
  constexpr double kLowBreak = 0.02425;

  double x;
  if (q < kLowBreak) {
    const double r = std::sqrt(-2.0 * std::log(q));
    x = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  } else {
    const double u = q - 0.5;
    const double r = u * u;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        u /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }

  // One Halley step against the erfc-based CDF.
  const double e = NormalCdf(x) - q;
  const double u =
      e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace

double NormalCdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double InverseNormalCdf(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "normal quantile requires 0 < q < 1");
  }
  // The upper half is solved by reflection so the CDF residual is always
  // taken in the well-conditioned lower tail.
  if (q > 0.5) return -LowerQuantile(1.0 - q);
  return LowerQuantile(q);
}

Moments PassCountMoments(double alpha, std::int64_t n_tests) {
  RequireAlpha(alpha);
  if (n_tests < 1) {
    throw Error(ErrorCode::kInvalidArgument, "test count must be >= 1");
  }
  const double n = static_cast<double>(n_tests);
  return Moments{(1.0 - alpha) * n, n * alpha * (1.0 - alpha)};
}

double BinomialTail(std::int64_t n, double p, std::int64_t k_max) {
  if (n < 0 || k_max < 0 || k_max > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "binomial tail requires 0 <= k_max <= n");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "binomial tail requires 0 < p < 1");
  }
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);

  // log C(n, s) is built incrementally; lgamma is avoided because glibc's
  // version writes the global signgam.
  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(k_max) + 1);
  double log_choose = 0.0;
  double peak = -INFINITY;
  for (std::int64_t s = 0; s <= k_max; ++s) {
    if (s > 0) {
      log_choose += std::log(static_cast<double>(n - s + 1)) -
                    std::log(static_cast<double>(s));
    }
    const double term = log_choose + static_cast<double>(s) * log_p +
                        static_cast<double>(n - s) * log_q;
    log_terms.push_back(term);
    peak = std::max(peak, term);
  }
  long double sum = 0.0L;
  for (double term : log_terms) sum += std::exp(static_cast<long double>(term - peak));
  const double tail = std::exp(peak + static_cast<double>(std::log(sum)));
  return std::min(1.0, tail);
}

double TypeOneErrorBound(double alpha, std::int64_t n_tests,
                         std::int64_t t_rounds) {
  if (t_rounds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "round count must be >= 1");
  }
  const Moments moments = PassCountMoments(alpha, n_tests);
  // Largest pass count strictly below E[r_t]; the small slack absorbs
  // representation error in (1 - alpha) * N.
  const auto below = static_cast<std::int64_t>(std::ceil(moments.mean - 1e-9)) - 1;
  const double single = below < 0 ? 0.0 : BinomialTail(n_tests, 1.0 - alpha, below);
  return std::pow(single, static_cast<double>(t_rounds));
}

}  // namespace imgrand
