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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tracegen/artifact.hpp"
#include "tracegen/event_forest.hpp"
#include "tracegen/json.hpp"
#include "tracegen/persona.hpp"

namespace tracegen {

inline constexpr int kEnvelopeVersion = 1;
inline constexpr std::string_view kTimelineSortRule =
    "email send_time; message_thread first message; calendar_entry start_time; reminder due_time; "
    "wallet_pass valid_from; ties keep generation order";

struct Provenance {
    std::uint64_t seed = 0;
    std::string backend_id;
    std::string config_hash;  // hex SHA-256 of the canonical run config

    Json to_json() const;
};

struct DigitalFootprint {
    std::string persona_id;
    PersonaProfile profile;
    EventForest forest;
    std::vector<Artifact> artifacts;  // sorted by primary_time
    Provenance provenance;
};

// Stable-sorts the artifacts into a timeline. Throws kDanglingEventRef (the
// detail names the artifact index) when an event id is not in the forest.
DigitalFootprint assemble(std::string persona_id, PersonaProfile profile, EventForest forest,
                          std::vector<Artifact> artifacts, Provenance provenance = {});

// {persona_id, event_id, kind, direction, payload}
Json to_envelope(std::string_view persona_id, const Artifact& artifact);

struct EnvelopeRecord {
    std::string persona_id;
    Artifact artifact;
};

// Throws kSchemaViolation.
EnvelopeRecord from_envelope(const Json& j);

std::string to_jsonl(std::string_view persona_id, const std::vector<Artifact>& artifacts);

// Returns the record count. Throws kIoError.
std::size_t export_jsonl(const DigitalFootprint& footprint, const std::filesystem::path& path);

// Throws kIoError, kParseError, kSchemaViolation.
std::vector<EnvelopeRecord> load_jsonl(const std::filesystem::path& path);

// RFC 5545 calendar of the footprint's calendar entries: CRLF line endings,
// floating DTSTART/DTEND, lines folded at 75 octets.
std::string to_ics(std::string_view persona_id, const std::vector<Artifact>& artifacts);

// Returns the VEVENT count. Throws kIoError.
std::size_t export_ics(const DigitalFootprint& footprint, const std::filesystem::path& path);

// TEXT value escaping for ICS (backslash, semicolon, comma, newline).
std::string ics_escape(std::string_view value);

// Splits a content line into folded physical lines, never inside a UTF-8
// sequence. Each returned piece excludes the CRLF.
std::vector<std::string> ics_fold(std::string_view line, std::size_t limit = 75);

}  // namespace tracegen
