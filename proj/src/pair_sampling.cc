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

#include "imgrand/pair_sampling.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "imgrand/error.h"

namespace imgrand {

PairSampler::PairSampler(ImageDomain domain, PairSampling method,
                         std::int64_t max_offset)
    : domain_(domain),
      method_(method),
      stamp_(static_cast<std::size_t>(std::max<std::int64_t>(domain.size(), 0)), 0) {
  if (domain.width <= 0 || domain.height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty image domain");
  }
  if (max_offset < 1) {
    throw Error(ErrorCode::kInvalidArgument, "maximum pair offset must be >= 1");
  }
  for (std::int64_t dr = 0; dr <= max_offset; ++dr) {
    for (std::int64_t dc = -max_offset; dc <= max_offset; ++dc) {
      if (dr > 0 || dc > 0) offsets_.push_back(Location{dr, dc});
    }
  }
}

void PairSampler::BeginTrial() {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

bool PairSampler::IsFree(std::int64_t index) const {
  return stamp_[static_cast<std::size_t>(index)] != epoch_;
}

void PairSampler::Claim(std::int64_t index) {
  stamp_[static_cast<std::size_t>(index)] = epoch_;
}

void PairSampler::Sample(std::int64_t m, Xoshiro256StarStar& rng,
                         PairSample& out) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pair count must be >= 1");
  }
  if (2 * m > domain_.size()) {
    throw Error(ErrorCode::kDomainTooSmall,
                "cannot place " + std::to_string(m) + " disjoint pairs in " +
                    std::to_string(domain_.size()) + " pixels");
  }
  out.left.clear();
  out.right.clear();
  out.left.reserve(static_cast<std::size_t>(m));
  out.right.reserve(static_cast<std::size_t>(m));
  BeginTrial();
  if (method_ == PairSampling::kUniform) {
    SampleUniform(m, rng, out);
  } else {
    SampleLocal(m, rng, out);
  }
}

void PairSampler::SampleUniform(std::int64_t m, Xoshiro256StarStar& rng,
                                PairSample& out) {
  const std::int64_t n = domain_.size();
  const std::int64_t draws = 2 * m;
  auto emit = [&](std::int64_t k, std::int64_t index) {
    (k % 2 == 0 ? out.left : out.right).push_back(index);
  };
  if (draws * 2 > n) {
    // Dense draw: partial Fisher-Yates over the whole domain.
    scratch_.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) scratch_[static_cast<std::size_t>(i)] = i;
    for (std::int64_t k = 0; k < draws; ++k) {
      const auto j = k + static_cast<std::int64_t>(
                             rng.Below(static_cast<std::uint64_t>(n - k)));
      std::swap(scratch_[static_cast<std::size_t>(k)],
                scratch_[static_cast<std::size_t>(j)]);
      emit(k, scratch_[static_cast<std::size_t>(k)]);
    }
    return;
  }
  for (std::int64_t k = 0; k < draws; ++k) {
    std::int64_t index;
    do {
      index = static_cast<std::int64_t>(rng.Below(static_cast<std::uint64_t>(n)));
    } while (!IsFree(index));
    Claim(index);
    emit(k, index);
  }
}

void PairSampler::SampleLocal(std::int64_t m, Xoshiro256StarStar& rng,
                              PairSample& out) {
  const std::int64_t n = domain_.size();
  const Location offset = offsets_[rng.Below(offsets_.size())];
  const std::int64_t step = domain_.ToIndex(offset);

  auto try_pair = [&](std::int64_t index) {
    if (!IsFree(index) || !IsFree(index + step)) return;
    Claim(index);
    Claim(index + step);
    out.left.push_back(index);
    out.right.push_back(index + step);
  };

  // Anchors whose partner stays inside the image form a rectangle.
  const std::int64_t rows = domain_.height - offset.row;
  const std::int64_t col_lo = std::max<std::int64_t>(0, -offset.col);
  const std::int64_t cols = domain_.width - std::abs(offset.col);
  if (rows > 0 && cols > 0) {
    const auto anchors = static_cast<std::uint64_t>(rows * cols);
    std::int64_t budget = 4 * m + 64;
    while (out.size() < m && budget-- > 0) {
      const auto k = static_cast<std::int64_t>(rng.Below(anchors));
      try_pair(domain_.ToIndex(Location{k / cols, col_lo + k % cols}));
    }
  }

  std::int64_t index = static_cast<std::int64_t>(rng.Below(static_cast<std::uint64_t>(n)));
  for (std::int64_t scanned = 0; scanned < n && out.size() < m; ++scanned) {
    const Location here = domain_.ToLocation(index);
    if (domain_.Contains(Location{here.row + offset.row, here.col + offset.col})) {
      try_pair(index);
    }
    if (++index == n) index = 0;
  }
  if (out.size() < m) FillUniform(m, rng, out);
}

void PairSampler::FillUniform(std::int64_t m, Xoshiro256StarStar& rng,
                              PairSample& out) {
  scratch_.clear();
  for (std::int64_t i = 0; i < domain_.size(); ++i) {
    if (IsFree(i)) scratch_.push_back(i);
  }
  const std::int64_t draws = 2 * (m - out.size());
  const auto free_count = static_cast<std::int64_t>(scratch_.size());
  for (std::int64_t k = 0; k < draws; ++k) {
    const auto j = k + static_cast<std::int64_t>(
                           rng.Below(static_cast<std::uint64_t>(free_count - k)));
    std::swap(scratch_[static_cast<std::size_t>(k)],
              scratch_[static_cast<std::size_t>(j)]);
    const std::int64_t index = scratch_[static_cast<std::size_t>(k)];
    Claim(index);
    (k % 2 == 0 ? out.left : out.right).push_back(index);
  }
}

PairSample SampleDisjointPairs(ImageDomain domain, std::int64_t m,
                               Xoshiro256StarStar& rng) {
  PairSampler sampler(domain, PairSampling::kUniform);
  PairSample sample;
  sampler.Sample(m, rng, sample);
  return sample;
}

PairSample SampleLocalPairs(ImageDomain domain, std::int64_t m,
                            Xoshiro256StarStar& rng, std::int64_t max_offset) {
  PairSampler sampler(domain, PairSampling::kLocal, max_offset);
  PairSample sample;
  sampler.Sample(m, rng, sample);
  return sample;
}

bool IsValidPairSample(const PairSample& sample, ImageDomain domain) {
  if (sample.left.size() != sample.right.size()) return false;
  std::unordered_set<std::int64_t> seen;
  seen.reserve(sample.left.size() * 2);
  for (const auto* side : {&sample.left, &sample.right}) {
    for (std::int64_t index : *side) {
      if (index < 0 || index >= domain.size()) return false;
      if (!seen.insert(index).second) return false;
    }
  }
  return true;
}

double MeanAbsDifference(const GrayImage& image, const PairSample& sample) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < sample.left.size(); ++i) {
    const std::int64_t a = image[sample.left[i]];
    const std::int64_t b = image[sample.right[i]];
    total += a > b ? a - b : b - a;
  }
  return static_cast<double>(total) / static_cast<double>(sample.left.size());
}

}  // namespace imgrand
