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

#ifndef IMGRAND_PGM_H_
#define IMGRAND_PGM_H_

// Netpbm graymap (PGM) reading and writing.
//
// Accepted: magic P2 (ASCII samples) or P5 (binary samples), '#' comments
// anywhere in the header, maxval 255 or 65535. 16-bit P5 samples are
// big-endian. The image's level count is maxval + 1.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "imgrand/image.h"

namespace imgrand {

enum class PgmEncoding { kAscii, kBinary };

// Throws ParseError carrying the byte offset of the first problem.
GrayImage ReadPgm(std::span<const std::uint8_t> bytes);

// Throws kInvalidArgument for images with a level count PGM cannot carry
// here (anything but 256 or 65536).
std::vector<std::uint8_t> WritePgm(const GrayImage& image,
                                   PgmEncoding encoding = PgmEncoding::kBinary);

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes);

GrayImage ReadPgmFile(const std::filesystem::path& path);
void WritePgmFile(const std::filesystem::path& path, const GrayImage& image,
                  PgmEncoding encoding = PgmEncoding::kBinary);

}  // namespace imgrand

#endif  // IMGRAND_PGM_H_
