// Copyright 2026 The tracegen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tracegen {

// Values are part of the C ABI (see include/tracegen/tracegen.h). Append only.
enum class ErrorCode : int {
    kOk = 0,
    kInvalidArgument = 1,
    kInvalidRequest = 2,
    kProviderUnavailable = 3,
    kBudgetExceeded = 4,
    kNoJsonFound = 5,
    kSchemaViolation = 6,
    kParseError = 7,
    kNormalizationError = 8,
    kEmptyMarginal = 9,
    kProfileGenerationFailed = 10,
    kEmptyTokenSet = 11,
    kSignatureMismatch = 12,
    kAlignmentFailed = 13,
    kOutlineFailed = 14,
    kGenerationFailed = 15,
    kDanglingEventRef = 16,
    kIoError = 17,
    kDegenerateVector = 18,
    kZeroVector = 19,
    kJudgeParseFailed = 20,
    kConfigError = 21,
    kVersionMismatch = 22,
    kInternal = 99,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Error(ErrorCode code, const std::string& message, std::vector<std::string> details)
        : std::runtime_error(message), code_(code), details_(std::move(details)) {}

    ErrorCode code() const noexcept { return code_; }

    // Field-level detail, e.g. the offending fields of a schema violation.
    const std::vector<std::string>& details() const noexcept { return details_; }

private:
    ErrorCode code_;
    std::vector<std::string> details_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace tracegen
