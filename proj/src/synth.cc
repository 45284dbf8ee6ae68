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

#include "imgrand/synth.h"

#include <algorithm>
#include <string>
#include <vector>

#include "imgrand/error.h"
#include "imgrand/rng.h"

namespace imgrand {
namespace {

constexpr std::uint64_t kSynthStream = 0x73796e7468ULL;

void RequireDims(std::int64_t width, std::int64_t height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be positive");
  }
}

}  // namespace

GrayImage SynthIid(std::int64_t levels, std::int64_t width, std::int64_t height,
                   const IntensityDistribution& dist, std::uint64_t seed) {
  RequireDims(width, height);
  if (dist.levels() != levels) {
    throw Error(ErrorCode::kInvalidArgument,
                "distribution has " + std::to_string(dist.levels()) +
                    " levels, image has " + std::to_string(levels));
  }
  const auto probs = dist.probs();
  std::vector<double> cdf(probs.size());
  double running = 0.0;
  std::size_t last_occupied = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    running += probs[k];
    cdf[k] = running;
    if (probs[k] > 0.0) last_occupied = k;
  }

  Xoshiro256StarStar rng(DeriveSeed(seed, {kSynthStream}));
  std::vector<Pixel> pixels(static_cast<std::size_t>(width * height));
  for (auto& px : pixels) {
    const double u = rng.Uniform01();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto k = static_cast<std::size_t>(it - cdf.begin());
    px = static_cast<Pixel>(std::min(k, last_occupied));
  }
  return GrayImage(width, height, levels, std::move(pixels));
}

GrayImage SynthStructured(Pattern pattern, std::int64_t levels,
                          std::int64_t width, std::int64_t height,
                          std::int64_t stripe_period) {
  RequireDims(width, height);
  if (!IsSupportedLevelCount(levels)) {
    throw Error(ErrorCode::kInvalidArgument,
                "unsupported level count " + std::to_string(levels));
  }
  if (pattern == Pattern::kStripes && stripe_period < 2) {
    throw Error(ErrorCode::kInvalidArgument, "stripe period must be >= 2");
  }
  const std::int64_t total = width * height;
  const auto top = static_cast<Pixel>(levels - 1);
  std::vector<Pixel> pixels(static_cast<std::size_t>(total));
  for (std::int64_t row = 0; row < height; ++row) {
    for (std::int64_t col = 0; col < width; ++col) {
      const std::int64_t index = row * width + col;
      Pixel value = 0;
      switch (pattern) {
        case Pattern::kRamp:
          value = static_cast<Pixel>(index * levels / total);
          break;
        case Pattern::kChecker:
          value = (row + col) % 2 == 0 ? 0 : top;
          break;
        case Pattern::kStripes:
          value = row % stripe_period < stripe_period / 2 ? 0 : top;
          break;
      }
      pixels[static_cast<std::size_t>(index)] = value;
    }
  }
  return GrayImage(width, height, levels, std::move(pixels));
}

}  // namespace imgrand
