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

#include "tracegen/error.hpp"

namespace tracegen {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kOk: return "Ok";
        case ErrorCode::kInvalidArgument: return "InvalidArgument";
        case ErrorCode::kInvalidRequest: return "InvalidRequest";
        case ErrorCode::kProviderUnavailable: return "ProviderUnavailable";
        case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
        case ErrorCode::kNoJsonFound: return "NoJsonFound";
        case ErrorCode::kSchemaViolation: return "SchemaViolation";
        case ErrorCode::kParseError: return "ParseError";
        case ErrorCode::kNormalizationError: return "NormalizationError";
        case ErrorCode::kEmptyMarginal: return "EmptyMarginal";
        case ErrorCode::kProfileGenerationFailed: return "ProfileGenerationFailed";
        case ErrorCode::kEmptyTokenSet: return "EmptyTokenSet";
        case ErrorCode::kSignatureMismatch: return "SignatureMismatch";
        case ErrorCode::kAlignmentFailed: return "AlignmentFailed";
        case ErrorCode::kOutlineFailed: return "OutlineFailed";
        case ErrorCode::kGenerationFailed: return "GenerationFailed";
        case ErrorCode::kDanglingEventRef: return "DanglingEventRef";
        case ErrorCode::kIoError: return "IoError";
        case ErrorCode::kDegenerateVector: return "DegenerateVector";
        case ErrorCode::kZeroVector: return "ZeroVector";
        case ErrorCode::kJudgeParseFailed: return "JudgeParseFailed";
        case ErrorCode::kConfigError: return "ConfigError";
        case ErrorCode::kVersionMismatch: return "VersionMismatch";
        case ErrorCode::kInternal: return "Internal";
    }
    return "Unknown";
}

}  // namespace tracegen
