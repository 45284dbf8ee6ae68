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

#ifndef IMGRAND_ERROR_H_
#define IMGRAND_ERROR_H_

#include <stdexcept>
#include <string>

namespace imgrand {

enum class ErrorCode {
  kInvalidArgument,
  // Zero pixel-difference variance: the Z statistic is undefined and the
  // image is trivially distinguishable from a perfectly shuffled one.
  kDegenerateImage,
  // The image domain cannot host the requested number of disjoint pairs.
  kDomainTooSmall,
  kParse,
  kIo,
  kFeatureNotAvailable,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; callers
// branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures additionally carry the byte offset where the input went bad.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::kParse,
              message + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace imgrand

#endif  // IMGRAND_ERROR_H_
