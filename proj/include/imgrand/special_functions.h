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

#ifndef IMGRAND_SPECIAL_FUNCTIONS_H_
#define IMGRAND_SPECIAL_FUNCTIONS_H_

#include <cstdint>

namespace imgrand {

// Standard normal CDF via erfc.
double NormalCdf(double z);

// Standard normal quantile. Acklam's rational approximation followed by one
// Halley step against NormalCdf; absolute error below 1e-9 on (1e-6, 1-1e-6).
// Throws kInvalidArgument unless 0 < q < 1.
double InverseNormalCdf(double q);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

// Mean and variance of the per-round pass count r_t ~ Binomial(N, 1-alpha).
Moments PassCountMoments(double alpha, std::int64_t n_tests);

// P(X <= k_max) for X ~ Binomial(n, p), accumulated in log space.
double BinomialTail(std::int64_t n, double p, std::int64_t k_max);

// Probability under the null that the best of T rounds still falls below the
// expected pass count: P(r_t < E[r_t])^T.
double TypeOneErrorBound(double alpha, std::int64_t n_tests,
                         std::int64_t t_rounds);

}  // namespace imgrand

#endif  // IMGRAND_SPECIAL_FUNCTIONS_H_
