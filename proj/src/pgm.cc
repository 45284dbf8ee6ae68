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

#include "imgrand/pgm.h"

#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "imgrand/error.h"

namespace imgrand {
namespace {

bool IsSpace(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class HeaderReader {
 public:
  HeaderReader(std::span<const std::uint8_t> bytes, std::size_t start)
      : bytes_(bytes), pos_(start) {}

  std::size_t offset() const { return pos_; }

  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t ReadUnsigned(const char* what) {
    SkipSpaceAndComments();
    const std::size_t start = pos_;
    if (pos_ >= bytes_.size()) {
      throw ParseError(std::string("unexpected end of data reading ") + what,
                       pos_);
    }
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(std::string(what) + " is too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(std::string("expected a decimal number for ") + what,
                       start);
    }
    if (pos_ < bytes_.size() && !IsSpace(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw ParseError(std::string("unexpected character after ") + what, pos_);
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from a binary raster.
  void ConsumeSingleSpace() {
    if (pos_ >= bytes_.size() || !IsSpace(bytes_[pos_])) {
      throw ParseError("expected whitespace before binary raster", pos_);
    }
    ++pos_;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
};

void AppendAscii(std::vector<std::uint8_t>& out, const std::string& text) {
  out.insert(out.end(), text.begin(), text.end());
}

}  // namespace

GrayImage ReadPgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw ParseError("bad magic number (expected P2 or P5)", 0);
  }
  if (bytes.size() > 2 && !IsSpace(bytes[2]) && bytes[2] != '#') {
    throw ParseError("bad magic number (expected P2 or P5)", 0);
  }
  const bool binary = bytes[1] == '5';
  HeaderReader tail(bytes, 2);
  const std::uint64_t width = tail.ReadUnsigned("width");
  const std::uint64_t height = tail.ReadUnsigned("height");
  tail.SkipSpaceAndComments();
  const std::size_t maxval_offset = tail.offset();
  const std::uint64_t maxval = tail.ReadUnsigned("maxval");

  if (width == 0 || height == 0) {
    throw ParseError("image dimensions must be positive", maxval_offset);
  }
  if (maxval != 255 && maxval != 65535) {
    throw ParseError("unsupported maxval " + std::to_string(maxval) +
                         " (expected 255 or 65535)",
                     maxval_offset);
  }
  const std::uint64_t count = width * height;
  if (count > (std::uint64_t{1} << 31)) {
    throw ParseError("image has too many pixels", 2);
  }
  std::vector<Pixel> pixels;
  pixels.reserve(static_cast<std::size_t>(count));

  if (binary) {
    tail.ConsumeSingleSpace();
    const std::size_t start = tail.offset();
    const std::uint64_t sample_bytes = maxval == 255 ? 1 : 2;
    const std::uint64_t expected = count * sample_bytes;
    const std::uint64_t available = bytes.size() - start;
    if (available < expected) {
      throw ParseError("truncated raster: expected " + std::to_string(expected) +
                           " bytes, got " + std::to_string(available),
                       bytes.size());
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      if (sample_bytes == 1) {
        pixels.push_back(bytes[start + i]);
      } else {
        const std::size_t at = start + 2 * i;
        pixels.push_back(static_cast<Pixel>((bytes[at] << 8) | bytes[at + 1]));
      }
    }
  } else {
    for (std::uint64_t i = 0; i < count; ++i) {
      tail.SkipSpaceAndComments();
      const std::size_t sample_offset = tail.offset();
      const std::uint64_t value = tail.ReadUnsigned("pixel sample");
      if (value > maxval) {
        throw ParseError("pixel value " + std::to_string(value) +
                             " exceeds maxval " + std::to_string(maxval),
                         sample_offset);
      }
      pixels.push_back(static_cast<Pixel>(value));
    }
  }
  return GrayImage(static_cast<std::int64_t>(width),
                   static_cast<std::int64_t>(height),
                   static_cast<std::int64_t>(maxval) + 1, std::move(pixels));
}

std::vector<std::uint8_t> WritePgm(const GrayImage& image, PgmEncoding encoding) {
  if (image.levels() != 256 && image.levels() != 65536) {
    throw Error(ErrorCode::kInvalidArgument,
                "PGM output supports 256 or 65536 levels, image has " +
                    std::to_string(image.levels()));
  }
  const std::int64_t maxval = image.levels() - 1;
  std::vector<std::uint8_t> out;
  AppendAscii(out, std::string(encoding == PgmEncoding::kBinary ? "P5" : "P2") +
                       "\n" + std::to_string(image.width()) + " " +
                       std::to_string(image.height()) + "\n" +
                       std::to_string(maxval) + "\n");
  if (encoding == PgmEncoding::kBinary) {
    for (Pixel v : image.pixels()) {
      if (maxval > 255) out.push_back(static_cast<std::uint8_t>(v >> 8));
      out.push_back(static_cast<std::uint8_t>(v & 0xff));
    }
    return out;
  }
  for (std::int64_t row = 0; row < image.height(); ++row) {
    std::string line;
    for (std::int64_t col = 0; col < image.width(); ++col) {
      if (col > 0) line += ' ';
      line += std::to_string(image.at(row, col));
    }
    line += '\n';
    AppendAscii(out, line);
  }
  return out;
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::kIo, "failed writing " + path.string());
  }
}

GrayImage ReadPgmFile(const std::filesystem::path& path) {
  return ReadPgm(ReadFileBytes(path));
}

void WritePgmFile(const std::filesystem::path& path, const GrayImage& image,
                  PgmEncoding encoding) {
  WriteFileBytes(path, WritePgm(image, encoding));
}

}  // namespace imgrand
