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

#ifndef IMGRAND_TRANSFORMS_H_
#define IMGRAND_TRANSFORMS_H_

// Reference shuffling and encryption transforms used as evaluation subjects.
// These are test fixtures, not secure constructions.

#include <cstdint>
#include <optional>
#include <vector>

#include "imgrand/image.h"

namespace imgrand {

struct TransformKey {
  std::uint64_t seed = 0;
  // Arnold map rounds; 1 when absent.
  std::optional<std::int64_t> iterations;
  // Block-cipher key material, used only by the block-cipher adapter.
  std::vector<std::uint8_t> cipher_key;
};

// Fisher-Yates permutation of [0, n) keyed by `seed` and `stream`.
std::vector<std::int64_t> RandomPermutation(std::int64_t n, std::uint64_t seed,
                                            std::uint64_t stream = 0);

// Random permutation method: pixels moved by a uniformly random permutation
// of Omega. out[i] = in[perm[i]].
GrayImage RpmShuffle(const GrayImage& image, const TransformKey& key);

// Row/column permutations used by RcsShuffle: output row r is input row
// rows[r], then output column c is column cols[c].
struct RowColumnPermutation {
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> cols;
};

RowColumnPermutation RcsPermutations(std::int64_t height, std::int64_t width,
                                     const TransformKey& key);
GrayImage ApplyRowColumnPermutation(const GrayImage& image,
                                    const RowColumnPermutation& perm);
RowColumnPermutation Invert(const RowColumnPermutation& perm);

// Row-column shuffling: independent row and column permutations, rows first.
GrayImage RcsShuffle(const GrayImage& image, const TransformKey& key);

// 2D cat map (x, y) -> ((x + y) mod N, (x + 2y) mod N), x = column, y = row.
Location ArnoldMap(Location point, std::int64_t n);

// Smallest k >= 1 with [[1,1],[1,2]]^k = I (mod n).
std::int64_t ArnoldPeriod(std::int64_t n);

// Moves the pixel at p to ArnoldMap(p), key.iterations times.
// Throws kInvalidArgument for non-square images.
GrayImage ArnoldShuffle(const GrayImage& image, const TransformKey& key);

// Logistic-map XOR stream: x_{n+1} = 3.99999 x_n (1 - x_n), x_0 in (0.1, 0.9)
// from the seed, 1000 iterations discarded, byte_n = floor(x_n 2^32) mod 256.
// This is a minimal reproducible stream scheme of our own, self-inverse under
// a fixed key. Requires an 8-bit image.
std::vector<std::uint8_t> LogisticKeystream(std::uint64_t seed, std::size_t count);
GrayImage LogisticEncrypt(const GrayImage& image, const TransformKey& key);

}  // namespace imgrand

#endif  // IMGRAND_TRANSFORMS_H_
