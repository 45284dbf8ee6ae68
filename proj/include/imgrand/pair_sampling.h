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

#ifndef IMGRAND_PAIR_SAMPLING_H_
#define IMGRAND_PAIR_SAMPLING_H_

// Random pixel-pair configurations for one hypothesis test.
//
// Every sampler returns m pairs over 2m pairwise-distinct locations, so the
// left and right location sets are disjoint and duplicate-free. Under the
// null model any such configuration gives i.i.d. pair differences.
//
// kLocal (default): draw an offset (dr, dc) uniformly from
//   { 0 <= dr <= K, -K <= dc <= K, (dr, dc) > (0, 0) }
// then place m pairs (p, p + (dr, dc)) at anchors p drawn uniformly among the
// locations whose partner is inside the image, rejecting anchors that would
// reuse a location. Each trial therefore sees a fresh scatter of neighbouring
// pairs. When rejections pile up (tiny images, m near |Omega|/2) a raster sweep
// from a random start pairs whatever is still free at that offset, and any
// shortfall after that is drawn uniformly from the unused locations.
//
// kUniform: 2m locations drawn uniformly without replacement from Omega and
// split alternately by draw order into left and right. This configuration
// only sees the image histogram, never its spatial arrangement.

#include <cstdint>
#include <vector>

#include "imgrand/image.h"
#include "imgrand/rng.h"

namespace imgrand {

enum class PairSampling { kLocal, kUniform };

inline constexpr std::int64_t kDefaultMaxOffset = 2;

// Pixel locations as row-major linear indices.
struct PairSample {
  std::vector<std::int64_t> left;
  std::vector<std::int64_t> right;

  std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(left.size());
  }
};

// Reusable sampler; holds per-domain scratch so a trial costs O(m).
// Not thread-safe; use one per worker.
class PairSampler {
 public:
  PairSampler(ImageDomain domain, PairSampling method,
              std::int64_t max_offset = kDefaultMaxOffset);

  // Throws kDomainTooSmall when 2m > |Omega| and kInvalidArgument for m < 1.
  void Sample(std::int64_t m, Xoshiro256StarStar& rng, PairSample& out);

 private:
  void BeginTrial();
  bool IsFree(std::int64_t index) const;
  void Claim(std::int64_t index);
  void SampleUniform(std::int64_t m, Xoshiro256StarStar& rng, PairSample& out);
  void SampleLocal(std::int64_t m, Xoshiro256StarStar& rng, PairSample& out);
  void FillUniform(std::int64_t m, Xoshiro256StarStar& rng, PairSample& out);

  ImageDomain domain_;
  PairSampling method_;
  std::vector<Location> offsets_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::int64_t> scratch_;
};

// Uniform scatter sampling of m disjoint pairs.
PairSample SampleDisjointPairs(ImageDomain domain, std::int64_t m,
                               Xoshiro256StarStar& rng);

// Local random configuration of m disjoint pairs.
PairSample SampleLocalPairs(ImageDomain domain, std::int64_t m,
                            Xoshiro256StarStar& rng,
                            std::int64_t max_offset = kDefaultMaxOffset);

// True when left and right have equal length, every location is inside the
// domain, and all 2m locations are distinct.
bool IsValidPairSample(const PairSample& sample, ImageDomain domain);

// (1/m) sum |y_left - y_right|, accumulated exactly in integers.
double MeanAbsDifference(const GrayImage& image, const PairSample& sample);

}  // namespace imgrand

#endif  // IMGRAND_PAIR_SAMPLING_H_
