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

#ifndef IMGRAND_SYNTH_H_
#define IMGRAND_SYNTH_H_

#include <cstdint>

#include "imgrand/distribution.h"
#include "imgrand/image.h"

namespace imgrand {

// Perfectly shuffled image: every pixel drawn i.i.d. from `dist` by
// inverse-CDF sampling on a xoshiro256** stream keyed by `seed`.
// dist.levels() must equal `levels`.
GrayImage SynthIid(std::int64_t levels, std::int64_t width, std::int64_t height,
                   const IntensityDistribution& dist, std::uint64_t seed);

enum class Pattern {
  kRamp,     // row-major ramp: pixel i = floor(i * L / |Omega|)
  kChecker,  // one-pixel checkerboard of 0 and L-1, 0 at the origin
  kStripes,  // horizontal stripes: row r is 0 when (r mod period) < period/2,
             // else L-1
};

GrayImage SynthStructured(Pattern pattern, std::int64_t levels,
                          std::int64_t width, std::int64_t height,
                          std::int64_t stripe_period = 4);

}  // namespace imgrand

#endif  // IMGRAND_SYNTH_H_
