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

#include "imgrand/cli/providers.h"

#include <cstdio>

#include "imgrand/error.h"

#ifdef IMGRAND_HAVE_OPENSSL
#include <openssl/evp.h>
#endif

namespace imgrand::cli {
namespace {

#ifdef IMGRAND_HAVE_OPENSSL

const EVP_CIPHER* AesForKey(std::size_t key_bytes) {
  switch (key_bytes) {
    case 16:
      return EVP_aes_128_ecb();
    case 24:
      return EVP_aes_192_ecb();
    case 32:
      return EVP_aes_256_ecb();
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "AES key must be 16, 24 or 32 bytes, got " +
                      std::to_string(key_bytes));
  }
}

// Single-block AES through EVP in ECB mode with padding disabled; chaining is
// done by the adapter.
class OpenSslAes final : public BlockCipher {
 public:
  Block EncryptBlock(const Block& plaintext,
                     std::span<const std::uint8_t> key) const override {
    return Run(plaintext, key, 1);
  }
  Block DecryptBlock(const Block& ciphertext,
                     std::span<const std::uint8_t> key) const override {
    return Run(ciphertext, key, 0);
  }

 private:
  static Block Run(const Block& in, std::span<const std::uint8_t> key, int encrypt) {
    const EVP_CIPHER* type = AesForKey(key.size());
    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(
        EVP_CIPHER_CTX_new(), &EVP_CIPHER_CTX_free);
    Block out{};
    int written = 0;
    if (!ctx || EVP_CipherInit_ex(ctx.get(), type, nullptr, key.data(), nullptr, encrypt) != 1 ||
        EVP_CIPHER_CTX_set_padding(ctx.get(), 0) != 1 ||
        EVP_CipherUpdate(ctx.get(), out.data(), &written, in.data(),
                         static_cast<int>(in.size())) != 1 ||
        written != static_cast<int>(kBlockBytes)) {
      throw Error(ErrorCode::kFeatureNotAvailable, "OpenSSL AES call failed");
    }
    return out;
  }
};

#endif

}  // namespace

std::unique_ptr<BlockCipher> MakeBlockCipher(std::string_view name) {
#ifdef IMGRAND_HAVE_OPENSSL
  if (name == "aes") return std::make_unique<OpenSslAes>();
#else
  (void)name;
#endif
  return nullptr;
}

std::vector<std::string> AvailableBlockCiphers() {
#ifdef IMGRAND_HAVE_OPENSSL
  return {"aes"};
#else
  return {};
#endif
}

std::string Sha256Hex(std::span<const std::uint8_t> bytes) {
#ifdef IMGRAND_HAVE_OPENSSL
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    return {};
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
#else
  (void)bytes;
  return {};
#endif
}

}  // namespace imgrand::cli
