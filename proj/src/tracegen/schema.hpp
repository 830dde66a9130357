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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracegen/json.hpp"

namespace tracegen {

// Output contracts of every model-facing prompt. Each id names a versioned
// JSON Schema document (see schema_document), published under docs/schemas.
enum class SchemaId {
    kProfile,
    kSeedEvent,
    kSeedEventList,
    kExpandedEvent,
    kExpandedEventList,
    kReflection,
    kArtifactChoice,
    kEmail,
    kMessageThread,
    kCalendarEntry,
    kReminder,
    kWalletPass,
    kCritique,
    kJudge,
};

inline constexpr SchemaId kAllSchemas[] = {
    SchemaId::kProfile,       SchemaId::kSeedEvent,      SchemaId::kSeedEventList, SchemaId::kExpandedEvent,
    SchemaId::kExpandedEventList, SchemaId::kReflection, SchemaId::kArtifactChoice, SchemaId::kEmail,
    SchemaId::kMessageThread, SchemaId::kCalendarEntry,  SchemaId::kReminder,      SchemaId::kWalletPass,
    SchemaId::kCritique,      SchemaId::kJudge,
};

std::string_view schema_name(SchemaId id);
std::optional<SchemaId> schema_from_name(std::string_view name);

struct Violation {
    std::string field;  // dotted path, "" for the document root
    std::string message;

    std::string to_string() const { return field.empty() ? message : field + ": " + message; }
    bool operator==(const Violation&) const = default;
};

// The JSON Schema document for `id`. Supported keywords: type, required,
// properties, additionalProperties (bool), enum, items, minItems, maxItems,
// minLength (counted after trimming whitespace), minimum, maximum, and the
// formats "email" and "local-date-time".
const Json& schema_document(SchemaId id);

std::vector<Violation> validate(SchemaId id, const Json& value);

// Validates against an arbitrary schema document of the supported subset.
std::vector<Violation> validate_against(const Json& schema, const Json& value);

bool is_valid_email_address(std::string_view address);

std::vector<std::string> to_strings(const std::vector<Violation>& violations);

}  // namespace tracegen
