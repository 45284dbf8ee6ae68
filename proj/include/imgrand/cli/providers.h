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

#ifndef IMGRAND_CLI_PROVIDERS_H_
#define IMGRAND_CLI_PROVIDERS_H_

// Third-party primitives the command-line tool plugs into the library:
// AES for the block-cipher adapter and SHA-256 for report provenance. Both
// come from OpenSSL when the build found it.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "imgrand/block_cipher.h"

namespace imgrand::cli {

// "aes" (AES-128/192/256 by key length) or nullptr when unavailable.
std::unique_ptr<BlockCipher> MakeBlockCipher(std::string_view name);

std::vector<std::string> AvailableBlockCiphers();

// Lowercase hex digest; empty when no SHA-256 implementation is built in.
std::string Sha256Hex(std::span<const std::uint8_t> bytes);

}  // namespace imgrand::cli

#endif  // IMGRAND_CLI_PROVIDERS_H_
