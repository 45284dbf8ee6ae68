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

#include "imgrand/block_cipher.h"

#include <algorithm>
#include <string>
#include <utility>

#include "imgrand/error.h"
#include "imgrand/rng.h"

namespace imgrand {
namespace {

constexpr std::uint64_t kIvStream = 0x6976ULL;

Block LoadBlock(std::span<const std::uint8_t> bytes, std::size_t offset) {
  Block block;
  std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(offset), kBlockBytes,
              block.begin());
  return block;
}

Block Xor(const Block& a, const Block& b) {
  Block out;
  for (std::size_t i = 0; i < kBlockBytes; ++i) out[i] = a[i] ^ b[i];
  return out;
}

}  // namespace

Block DeriveIv(std::uint64_t seed) {
  SplitMix64 mixer(DeriveSeed(seed, {kIvStream}));
  Block iv;
  for (std::size_t i = 0; i < kBlockBytes; i += 8) {
    const std::uint64_t word = mixer();
    for (std::size_t b = 0; b < 8; ++b) {
      iv[i + b] = static_cast<std::uint8_t>(word >> (8 * b));
    }
  }
  return iv;
}

std::vector<std::uint8_t> ImageToBytes(const GrayImage& image) {
  std::vector<std::uint8_t> bytes;
  const bool wide = image.levels() > 256;
  bytes.reserve(static_cast<std::size_t>(image.size()) * (wide ? 2 : 1));
  for (Pixel v : image.pixels()) {
    if (wide) bytes.push_back(static_cast<std::uint8_t>(v >> 8));
    bytes.push_back(static_cast<std::uint8_t>(v & 0xff));
  }
  return bytes;
}

GrayImage ImageFromBytes(std::int64_t width, std::int64_t height,
                         std::int64_t levels, std::span<const std::uint8_t> bytes) {
  const bool wide = levels > 256;
  const std::size_t count = static_cast<std::size_t>(width * height);
  if (bytes.size() < count * (wide ? 2 : 1)) {
    throw Error(ErrorCode::kInvalidArgument, "byte buffer too short for image");
  }
  std::vector<Pixel> pixels(count);
  for (std::size_t i = 0; i < count; ++i) {
    pixels[i] = wide ? static_cast<Pixel>((bytes[2 * i] << 8) | bytes[2 * i + 1])
                     : bytes[i];
  }
  return GrayImage(width, height, levels, std::move(pixels));
}

BlockCipherResult BlockCipherEncrypt(const GrayImage& image, BlockMode mode,
                                     const BlockCipher* cipher,
                                     const TransformKey& key) {
  if (cipher == nullptr) {
    throw Error(ErrorCode::kFeatureNotAvailable,
                "no block cipher implementation is available");
  }
  if (key.cipher_key.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "block cipher key is empty");
  }
  if (image.levels() == 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "block cipher modes need 8- or 16-bit samples");
  }
  std::vector<std::uint8_t> bytes = ImageToBytes(image);
  const std::size_t padding = (kBlockBytes - bytes.size() % kBlockBytes) % kBlockBytes;
  bytes.resize(bytes.size() + padding, 0);

  BlockCipherResult result{image, {}, padding, std::nullopt};
  result.ciphertext.resize(bytes.size());
  Block chain{};
  if (mode == BlockMode::kCbc) {
    chain = DeriveIv(key.seed);
    result.iv = chain;
  }
  for (std::size_t offset = 0; offset < bytes.size(); offset += kBlockBytes) {
    Block block = LoadBlock(bytes, offset);
    if (mode == BlockMode::kCbc) block = Xor(block, chain);
    const Block out = cipher->EncryptBlock(block, key.cipher_key);
    std::copy(out.begin(), out.end(),
              result.ciphertext.begin() + static_cast<std::ptrdiff_t>(offset));
    chain = out;
  }
  result.image = ImageFromBytes(image.width(), image.height(), image.levels(),
                                result.ciphertext);
  return result;
}

std::vector<std::uint8_t> BlockCipherDecrypt(std::span<const std::uint8_t> ciphertext,
                                             BlockMode mode, const BlockCipher& cipher,
                                             std::span<const std::uint8_t> cipher_key,
                                             const std::optional<Block>& iv) {
  if (ciphertext.size() % kBlockBytes != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "ciphertext length is not a multiple of the block size");
  }
  if (mode == BlockMode::kCbc && !iv) {
    throw Error(ErrorCode::kInvalidArgument, "CBC decryption needs the IV");
  }
  std::vector<std::uint8_t> plain(ciphertext.size());
  Block chain = iv.value_or(Block{});
  for (std::size_t offset = 0; offset < ciphertext.size(); offset += kBlockBytes) {
    const Block block = LoadBlock(ciphertext, offset);
    Block out = cipher.DecryptBlock(block, cipher_key);
    if (mode == BlockMode::kCbc) out = Xor(out, chain);
    std::copy(out.begin(), out.end(), plain.begin() + static_cast<std::ptrdiff_t>(offset));
    chain = block;
  }
  return plain;
}

}  // namespace imgrand
