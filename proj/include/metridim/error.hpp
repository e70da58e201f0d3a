// Copyright 2026 The metridim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metridim {

enum class ErrorCode {
  kNTooSmall,
  kSelfLoop,
  kVertexOutOfRange,
  kDisconnected,
  kEmptyLandmarkSet,
  kTooLargeForOracle,
  kInstanceTooLarge,
  kWOutOfRange,
  kDegenerateP,
  kDomainError,
  kXInR,
  kRegimeNotSparse,
  kParse,
  kIo,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNTooSmall: return "NTooSmall";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptyLandmarkSet: return "EmptyLandmarkSet";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kWOutOfRange: return "WOutOfRange";
    case ErrorCode::kDegenerateP: return "DegenerateP";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kXInR: return "XInR";
    case ErrorCode::kRegimeNotSparse: return "RegimeNotSparse";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Input data (rather than a flag or parameter) is at fault.
  bool is_data_error() const noexcept {
    switch (code_) {
      case ErrorCode::kDisconnected:
      case ErrorCode::kSelfLoop:
      case ErrorCode::kVertexOutOfRange:
      case ErrorCode::kParse:
      case ErrorCode::kIo:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace metridim
