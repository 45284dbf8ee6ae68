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

#include "imgrand/transforms.h"

#include <array>
#include <string>
#include <utility>

#include "imgrand/error.h"
#include "imgrand/rng.h"

namespace imgrand {
namespace {

constexpr std::uint64_t kPermutationStream = 0x7065726dULL;
constexpr std::uint64_t kLogisticStream = 0x6c6f67ULL;
constexpr double kLogisticRate = 3.99999;
constexpr int kLogisticBurnIn = 1000;

using Matrix2 = std::array<std::int64_t, 4>;  // row-major 2x2

Matrix2 MultiplyMod(const Matrix2& a, const Matrix2& b, std::int64_t n) {
  return {(a[0] * b[0] + a[1] * b[2]) % n, (a[0] * b[1] + a[1] * b[3]) % n,
          (a[2] * b[0] + a[3] * b[2]) % n, (a[2] * b[1] + a[3] * b[3]) % n};
}

}  // namespace

std::vector<std::int64_t> RandomPermutation(std::int64_t n, std::uint64_t seed,
                                            std::uint64_t stream) {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  Xoshiro256StarStar rng(DeriveSeed(seed, {kPermutationStream, stream}));
  for (std::int64_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.Below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  return perm;
}

GrayImage RpmShuffle(const GrayImage& image, const TransformKey& key) {
  const auto perm = RandomPermutation(image.size(), key.seed);
  std::vector<Pixel> out(static_cast<std::size_t>(image.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image[perm[i]];
  return GrayImage(image.width(), image.height(), image.levels(), std::move(out));
}

RowColumnPermutation RcsPermutations(std::int64_t height, std::int64_t width,
                                     const TransformKey& key) {
  return RowColumnPermutation{RandomPermutation(height, key.seed, 1),
                              RandomPermutation(width, key.seed, 2)};
}

GrayImage ApplyRowColumnPermutation(const GrayImage& image,
                                    const RowColumnPermutation& perm) {
  if (static_cast<std::int64_t>(perm.rows.size()) != image.height() ||
      static_cast<std::int64_t>(perm.cols.size()) != image.width()) {
    throw Error(ErrorCode::kInvalidArgument,
                "row/column permutation does not match image dimensions");
  }
  std::vector<Pixel> out(static_cast<std::size_t>(image.size()));
  std::size_t k = 0;
  for (std::int64_t r = 0; r < image.height(); ++r) {
    for (std::int64_t c = 0; c < image.width(); ++c) {
      out[k++] = image.at(perm.rows[static_cast<std::size_t>(r)],
                          perm.cols[static_cast<std::size_t>(c)]);
    }
  }
  return GrayImage(image.width(), image.height(), image.levels(), std::move(out));
}

RowColumnPermutation Invert(const RowColumnPermutation& perm) {
  auto invert = [](const std::vector<std::int64_t>& p) {
    std::vector<std::int64_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      inv[static_cast<std::size_t>(p[i])] = static_cast<std::int64_t>(i);
    }
    return inv;
  };
  return RowColumnPermutation{invert(perm.rows), invert(perm.cols)};
}

GrayImage RcsShuffle(const GrayImage& image, const TransformKey& key) {
  return ApplyRowColumnPermutation(
      image, RcsPermutations(image.height(), image.width(), key));
}

Location ArnoldMap(Location point, std::int64_t n) {
  const std::int64_t x = point.col;
  const std::int64_t y = point.row;
  return Location{(x + 2 * y) % n, (x + y) % n};
}

std::int64_t ArnoldPeriod(std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "Arnold map size must be >= 1");
  }
  if (n == 1) return 1;
  const Matrix2 step{1, 1, 1, 2};
  Matrix2 power = step;
  // The period of the cat map never exceeds 3n.
  for (std::int64_t k = 1; k <= 3 * n; ++k) {
    if (power == Matrix2{1, 0, 0, 1}) return k;
    power = MultiplyMod(power, step, n);
  }
  throw Error(ErrorCode::kInvalidArgument, "Arnold period search did not converge");
}

GrayImage ArnoldShuffle(const GrayImage& image, const TransformKey& key) {
  if (image.width() != image.height()) {
    throw Error(ErrorCode::kInvalidArgument,
                "Arnold transform requires a square image, got " +
                    std::to_string(image.width()) + "x" +
                    std::to_string(image.height()));
  }
  const std::int64_t rounds = key.iterations.value_or(1);
  if (rounds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "Arnold iterations must be >= 1");
  }
  const std::int64_t n = image.width();
  // Only the first `period` rounds are distinct.
  const std::int64_t effective = rounds % ArnoldPeriod(n);
  std::vector<Pixel> current(image.pixels().begin(), image.pixels().end());
  std::vector<Pixel> next(current.size());
  const ImageDomain domain = image.domain();
  for (std::int64_t round = 0; round < effective; ++round) {
    for (std::int64_t index = 0; index < image.size(); ++index) {
      const Location to = ArnoldMap(domain.ToLocation(index), n);
      next[static_cast<std::size_t>(domain.ToIndex(to))] =
          current[static_cast<std::size_t>(index)];
    }
    current.swap(next);
  }
  return GrayImage(image.width(), image.height(), image.levels(), std::move(current));
}

std::vector<std::uint8_t> LogisticKeystream(std::uint64_t seed, std::size_t count) {
  SplitMix64 mixer(DeriveSeed(seed, {kLogisticStream}));
  const double unit = (static_cast<double>(mixer() >> 11) + 0.5) * 0x1.0p-53;
  double x = 0.1 + 0.8 * unit;
  for (int i = 0; i < kLogisticBurnIn; ++i) x = kLogisticRate * x * (1.0 - x);
  std::vector<std::uint8_t> stream(count);
  for (auto& byte : stream) {
    x = kLogisticRate * x * (1.0 - x);
    byte = static_cast<std::uint8_t>(static_cast<std::uint64_t>(x * 0x1.0p32) & 0xff);
  }
  return stream;
}

GrayImage LogisticEncrypt(const GrayImage& image, const TransformKey& key) {
  if (image.levels() != 256) {
    throw Error(ErrorCode::kInvalidArgument,
                "logistic encryption requires an 8-bit image");
  }
  const auto stream = LogisticKeystream(key.seed, static_cast<std::size_t>(image.size()));
  std::vector<Pixel> out(stream.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Pixel>(image[static_cast<std::int64_t>(i)] ^ stream[i]);
  }
  return GrayImage(image.width(), image.height(), image.levels(), std::move(out));
}

}  // namespace imgrand
