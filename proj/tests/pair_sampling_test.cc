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

#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "imgrand/error.h"
#include "imgrand/synth.h"

namespace imgrand {
namespace {

TEST(SampleDisjointPairsTest, HalfTheDomainCoversEveryPixel) {
  for (auto method : {PairSampling::kUniform, PairSampling::kLocal}) {
    for (ImageDomain domain : {ImageDomain{2, 2}, ImageDomain{7, 6}, ImageDomain{16, 16}}) {
      Xoshiro256StarStar rng(3);
      PairSampler sampler(domain, method);
      PairSample sample;
      sampler.Sample(domain.size() / 2, rng, sample);
      ASSERT_TRUE(IsValidPairSample(sample, domain));
      std::set<std::int64_t> seen(sample.left.begin(), sample.left.end());
      seen.insert(sample.right.begin(), sample.right.end());
      EXPECT_EQ(static_cast<std::int64_t>(seen.size()), domain.size());
    }
  }
}

TEST(SampleDisjointPairsTest, SinglePairOnTinyImage) {
  Xoshiro256StarStar rng(8);
  const PairSample sample = SampleDisjointPairs(ImageDomain{2, 2}, 1, rng);
  ASSERT_EQ(sample.size(), 1);
  EXPECT_NE(sample.left[0], sample.right[0]);
  EXPECT_TRUE(IsValidPairSample(sample, ImageDomain{2, 2}));
}

TEST(SampleDisjointPairsTest, InclusionFrequencyIsUniform) {
  const ImageDomain domain{100, 100};
  constexpr int kDraws = 100000;
  constexpr std::int64_t kPairs = 10;
  std::vector<int> hits(static_cast<std::size_t>(domain.size()), 0);
  PairSampler sampler(domain, PairSampling::kUniform);
  PairSample sample;
  Xoshiro256StarStar rng(123);
  for (int draw = 0; draw < kDraws; ++draw) {
    sampler.Sample(kPairs, rng, sample);
    for (auto i : sample.left) ++hits[static_cast<std::size_t>(i)];
    for (auto i : sample.right) ++hits[static_cast<std::size_t>(i)];
  }
  const double p = 2.0 * kPairs / static_cast<double>(domain.size());
  const double expected = kDraws * p;
  const double se = std::sqrt(kDraws * p * (1.0 - p));
  for (int h : hits) EXPECT_LT(std::fabs(h - expected), 5.0 * se);
}

TEST(SampleDisjointPairsTest, DeterministicGivenGeneratorState) {
  Xoshiro256StarStar a(99);
  Xoshiro256StarStar b(99);
  const auto first = SampleDisjointPairs(ImageDomain{64, 64}, 500, a);
  const auto second = SampleDisjointPairs(ImageDomain{64, 64}, 500, b);
  EXPECT_EQ(first.left, second.left);
  EXPECT_EQ(first.right, second.right);
}

TEST(PairSamplerTest, AlwaysDisjointAndInside) {
  Xoshiro256StarStar rng(2024);
  for (auto method : {PairSampling::kUniform, PairSampling::kLocal}) {
    for (int trial = 0; trial < 300; ++trial) {
      const ImageDomain domain{1 + static_cast<std::int64_t>(rng.Below(40)),
                               1 + static_cast<std::int64_t>(rng.Below(40))};
      if (domain.size() < 2) continue;
      const auto m = 1 + static_cast<std::int64_t>(rng.Below(static_cast<std::uint64_t>(domain.size() / 2)));
      PairSampler sampler(domain, method, 1 + static_cast<std::int64_t>(rng.Below(3)));
      PairSample sample;
      sampler.Sample(m, rng, sample);
      ASSERT_EQ(sample.size(), m);
      ASSERT_TRUE(IsValidPairSample(sample, domain))
          << domain.width << "x" << domain.height << " m=" << m;
    }
  }
}

TEST(PairSamplerTest, LocalPairsShareOneSmallOffset) {
  const ImageDomain domain{512, 512};
  PairSampler sampler(domain, PairSampling::kLocal, 2);
  PairSample sample;
  Xoshiro256StarStar rng(17);
  std::set<std::pair<std::int64_t, std::int64_t>> offsets_seen;
  for (int trial = 0; trial < 200; ++trial) {
    sampler.Sample(1128, rng, sample);
    const Location a = domain.ToLocation(sample.left[0]);
    const Location b = domain.ToLocation(sample.right[0]);
    const Location offset{b.row - a.row, b.col - a.col};
    EXPECT_LE(std::abs(offset.row), 2);
    EXPECT_LE(std::abs(offset.col), 2);
    offsets_seen.insert({offset.row, offset.col});
    for (std::int64_t i = 0; i < sample.size(); ++i) {
      const Location l = domain.ToLocation(sample.left[static_cast<std::size_t>(i)]);
      const Location r = domain.ToLocation(sample.right[static_cast<std::size_t>(i)]);
      ASSERT_EQ(r.row - l.row, offset.row);
      ASSERT_EQ(r.col - l.col, offset.col);
    }
  }
  // 12 offsets with |dr|, |dc| <= 2 and (dr, dc) > (0, 0).
  EXPECT_EQ(offsets_seen.size(), 12u);
}

TEST(PairSamplerTest, ErrorPaths) {
  Xoshiro256StarStar rng(1);
  PairSampler sampler(ImageDomain{3, 3}, PairSampling::kLocal);
  PairSample sample;
  try {
    sampler.Sample(5, rng, sample);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainTooSmall);
  }
  EXPECT_THROW(sampler.Sample(0, rng, sample), Error);
  EXPECT_THROW(PairSampler(ImageDomain{3, 3}, PairSampling::kLocal, 0), Error);
}

TEST(IsValidPairSampleTest, DetectsViolations) {
  const ImageDomain domain{4, 4};
  EXPECT_TRUE(IsValidPairSample(PairSample{{0, 1}, {2, 3}}, domain));
  EXPECT_FALSE(IsValidPairSample(PairSample{{0, 1}, {1, 3}}, domain));
  EXPECT_FALSE(IsValidPairSample(PairSample{{0, 0}, {2, 3}}, domain));
  EXPECT_FALSE(IsValidPairSample(PairSample{{0}, {16}}, domain));
  EXPECT_FALSE(IsValidPairSample(PairSample{{0, 1}, {2}}, domain));
}

TEST(MeanAbsDifferenceTest, Examples) {
  const GrayImage flat = GrayImage::Filled(4, 4, 256, 9);
  EXPECT_EQ(MeanAbsDifference(flat, PairSample{{0, 1, 2}, {5, 6, 7}}), 0.0);

  const GrayImage binary(4, 1, 2, {0, 0, 1, 1});
  EXPECT_EQ(MeanAbsDifference(binary, PairSample{{0, 1}, {2, 3}}), 1.0);

  const GrayImage four(4, 1, 256, {0, 10, 20, 30});
  EXPECT_EQ(MeanAbsDifference(four, PairSample{{0, 1}, {3, 2}}), 20.0);
}

TEST(MeanAbsDifferenceTest, SixteenBitExtremes) {
  const GrayImage wide(2, 1, 65536, {0, 65535});
  EXPECT_EQ(MeanAbsDifference(wide, PairSample{{1}, {0}}), 65535.0);
}

}  // namespace
}  // namespace imgrand
