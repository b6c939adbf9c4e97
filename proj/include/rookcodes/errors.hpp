// Copyright 2026 The rookcodes Authors.
//
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

namespace rookcodes {

// Mirrors rk_status in rookcodes.h; keep the numbering in sync.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kSingularMatrix = 3,
  kSingularAfterRetry = 4,
  kNotEnoughProducts = 5,
  kDuplicateEvaluationPoint = 6,
  kPoleEvaluation = 7,
  kUncoveredPair = 8,
  kParameterSearchExhausted = 9,
  kSearchBudgetExceeded = 10,
  kConfigInvalid = 11,
  kParseError = 12,
  kIoError = 13,
  kInternal = 14,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace rookcodes
