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

#ifndef IMGRAND_RNG_H_
#define IMGRAND_RNG_H_

// Deterministic random number generation shared by every randomized part of
// the library.
//
// The stream generator is xoshiro256** (Blackman & Vigna, 2018). Its state is
// seeded from SplitMix64, and independent streams are derived by hashing a
// (seed, index...) tuple through SplitMix64's finalizer. Bounded integers use
// Lemire's multiply-shift rejection method and doubles take the top 53 bits,
// so output is identical on every platform and standard library.

#include <array>
#include <cstdint>
#include <initializer_list>

namespace imgrand {

// SplitMix64 finalizer: a bijective 64-bit mix.
constexpr std::uint64_t Mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return Mix64(state_);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256StarStar(std::uint64_t seed) noexcept {
    SplitMix64 init(seed);
    for (auto& word : s_) word = init();
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = Rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = Rotl(s_[3], 45);
    return result;
  }

  // Uniform integer in [0, bound). bound must be nonzero.
  constexpr std::uint64_t Below(std::uint64_t bound) noexcept {
    unsigned __int128 product =
        static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  // Uniform double in [0, 1) with 53 bits of resolution.
  constexpr double Uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t Rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

// Seed for the stream identified by `path` under `seed`. Distinct paths give
// statistically independent streams, and the result depends on nothing but
// its arguments.
constexpr std::uint64_t DeriveSeed(
    std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = Mix64(seed ^ 0x6a09e667f3bcc909ULL);
  for (std::uint64_t component : path) {
    h = Mix64(h ^ Mix64(component + 0x9e3779b97f4a7c15ULL));
  }
  return h;
}

}  // namespace imgrand

#endif  // IMGRAND_RNG_H_
