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

#ifndef IMGRAND_IMAGE_H_
#define IMGRAND_IMAGE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "imgrand/distribution.h"

namespace imgrand {

using Pixel = std::uint16_t;

struct Location {
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

// Rectangular pixel grid Omega. Pixels are addressed by row-major linear
// index throughout the library.
struct ImageDomain {
  std::int64_t width = 0;
  std::int64_t height = 0;

  std::int64_t size() const noexcept { return width * height; }
  Location ToLocation(std::int64_t index) const noexcept {
    return Location{index / width, index % width};
  }
  std::int64_t ToIndex(Location loc) const noexcept {
    return loc.row * width + loc.col;
  }
  bool Contains(Location loc) const noexcept {
    return loc.row >= 0 && loc.row < height && loc.col >= 0 && loc.col < width;
  }
};

// Grayscale image with L in {2, 256, 65536} intensity levels.
class GrayImage {
 public:
  // Throws kInvalidArgument on empty dimensions, unsupported levels, a pixel
  // count that differs from width * height, or a pixel >= levels.
  GrayImage(std::int64_t width, std::int64_t height, std::int64_t levels,
            std::vector<Pixel> pixels);

  // Image filled with `value`.
  static GrayImage Filled(std::int64_t width, std::int64_t height,
                          std::int64_t levels, Pixel value);

  std::int64_t width() const noexcept { return width_; }
  std::int64_t height() const noexcept { return height_; }
  std::int64_t levels() const noexcept { return levels_; }
  std::int64_t size() const noexcept { return width_ * height_; }
  ImageDomain domain() const noexcept { return {width_, height_}; }

  std::span<const Pixel> pixels() const noexcept { return pixels_; }
  Pixel operator[](std::int64_t index) const noexcept {
    return pixels_[static_cast<std::size_t>(index)];
  }
  Pixel at(std::int64_t row, std::int64_t col) const noexcept {
    return pixels_[static_cast<std::size_t>(row * width_ + col)];
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::int64_t width_;
  std::int64_t height_;
  std::int64_t levels_;
  std::vector<Pixel> pixels_;
};

bool IsSupportedLevelCount(std::int64_t levels) noexcept;

// Empirical intensity distribution p_k = #{pixels == k} / |Omega|.
IntensityDistribution Histogram(const GrayImage& image);

}  // namespace imgrand

#endif  // IMGRAND_IMAGE_H_
