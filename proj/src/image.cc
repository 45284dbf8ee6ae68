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

#include "imgrand/image.h"

#include <string>
#include <utility>

#include "imgrand/error.h"

namespace imgrand {

bool IsSupportedLevelCount(std::int64_t levels) noexcept {
  return levels == 2 || levels == 256 || levels == 65536;
}

GrayImage::GrayImage(std::int64_t width, std::int64_t height,
                     std::int64_t levels, std::vector<Pixel> pixels)
    : width_(width), height_(height), levels_(levels), pixels_(std::move(pixels)) {
  if (width_ <= 0 || height_ <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "image dimensions must be positive, got " +
                    std::to_string(width_) + "x" + std::to_string(height_));
  }
  if (!IsSupportedLevelCount(levels_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "unsupported level count " + std::to_string(levels_) +
                    " (expected 2, 256 or 65536)");
  }
  if (static_cast<std::int64_t>(pixels_.size()) != width_ * height_) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel buffer holds " + std::to_string(pixels_.size()) +
                    " samples, expected " + std::to_string(width_ * height_));
  }
  for (std::size_t i = 0; i < pixels_.size(); ++i) {
    if (pixels_[i] >= levels_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pixel " + std::to_string(i) + " has value " +
                      std::to_string(pixels_[i]) + " outside [0, " +
                      std::to_string(levels_ - 1) + "]");
    }
  }
}

GrayImage GrayImage::Filled(std::int64_t width, std::int64_t height,
                            std::int64_t levels, Pixel value) {
  const std::int64_t count = width > 0 && height > 0 ? width * height : 0;
  return GrayImage(width, height, levels,
                   std::vector<Pixel>(static_cast<std::size_t>(count), value));
}

IntensityDistribution Histogram(const GrayImage& image) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(image.levels()), 0);
  for (Pixel v : image.pixels()) ++counts[v];
  const double total = static_cast<double>(image.size());
  std::vector<double> probs(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    probs[k] = static_cast<double>(counts[k]) / total;
  }
  return IntensityDistribution(std::move(probs));
}

}  // namespace imgrand
