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

#ifndef IMGRAND_BLOCK_CIPHER_H_
#define IMGRAND_BLOCK_CIPHER_H_

// ECB and CBC modes over an externally supplied 128-bit block cipher.
//
// The image is serialized to raster-order bytes (one byte per 8-bit sample,
// two big-endian bytes per 16-bit sample), zero-padded to a multiple of 16,
// and encrypted blockwise. The ciphertext image keeps only the first
// width * height samples; padding never enters the evaluated region.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "imgrand/image.h"
#include "imgrand/transforms.h"

namespace imgrand {

inline constexpr std::size_t kBlockBytes = 16;
using Block = std::array<std::uint8_t, kBlockBytes>;

// Host-supplied cipher: encrypt_block(16 bytes, key) -> 16 bytes.
class BlockCipher {
 public:
  virtual ~BlockCipher() = default;
  virtual Block EncryptBlock(const Block& plaintext,
                             std::span<const std::uint8_t> key) const = 0;
  virtual Block DecryptBlock(const Block& ciphertext,
                             std::span<const std::uint8_t> key) const = 0;
};

enum class BlockMode { kEcb, kCbc };

struct BlockCipherResult {
  GrayImage image;
  // Full padded ciphertext, needed for decryption.
  std::vector<std::uint8_t> ciphertext;
  std::size_t padding = 0;
  // CBC only.
  std::optional<Block> iv;
};

// CBC initialization vector derived from the key seed.
Block DeriveIv(std::uint64_t seed);

std::vector<std::uint8_t> ImageToBytes(const GrayImage& image);
GrayImage ImageFromBytes(std::int64_t width, std::int64_t height,
                         std::int64_t levels, std::span<const std::uint8_t> bytes);

// Throws kFeatureNotAvailable when cipher is null, kInvalidArgument when
// key.cipher_key is empty or the image has 2 levels.
BlockCipherResult BlockCipherEncrypt(const GrayImage& image, BlockMode mode,
                                     const BlockCipher* cipher,
                                     const TransformKey& key);

// Inverse of the mode; returns the padded plaintext bytes.
std::vector<std::uint8_t> BlockCipherDecrypt(std::span<const std::uint8_t> ciphertext,
                                             BlockMode mode, const BlockCipher& cipher,
                                             std::span<const std::uint8_t> cipher_key,
                                             const std::optional<Block>& iv);

}  // namespace imgrand

#endif  // IMGRAND_BLOCK_CIPHER_H_
