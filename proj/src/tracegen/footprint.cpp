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

#include "tracegen/footprint.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tracegen/error.hpp"

namespace tracegen {

Json Provenance::to_json() const {
    return Json{{"seed", seed},
                {"backend_id", backend_id},
                {"config_hash", config_hash},
                {"timeline_sort", kTimelineSortRule}};
}

DigitalFootprint assemble(std::string persona_id, PersonaProfile profile, EventForest forest,
                          std::vector<Artifact> artifacts, Provenance provenance) {
    for (std::size_t i = 0; i < artifacts.size(); ++i) {
        if (!forest.contains(artifacts[i].event_id)) {
            throw Error(ErrorCode::kDanglingEventRef,
                        "artifact " + std::to_string(i) + " references missing event " +
                            std::to_string(artifacts[i].event_id),
                        {std::to_string(i)});
        }
    }
    std::stable_sort(artifacts.begin(), artifacts.end(),
                     [](const Artifact& a, const Artifact& b) { return a.primary_time() < b.primary_time(); });
    return DigitalFootprint{std::move(persona_id), std::move(profile), std::move(forest), std::move(artifacts),
                            std::move(provenance)};
}

Json to_envelope(std::string_view persona_id, const Artifact& artifact) {
    return Json{{"persona_id", persona_id},
                {"event_id", artifact.event_id},
                {"kind", to_string(artifact.kind())},
                {"direction", to_string(artifact.direction)},
                {"payload", payload_to_json(artifact.payload)}};
}

EnvelopeRecord from_envelope(const Json& j) {
    auto bad = [](const std::string& why) { return Error(ErrorCode::kSchemaViolation, "invalid envelope: " + why); };
    if (!j.is_object()) throw bad("not an object");
    for (const char* key : {"persona_id", "event_id", "kind", "direction", "payload"}) {
        if (!j.contains(key)) throw bad(std::string("missing ") + key);
    }
    if (!j["persona_id"].is_string()) throw bad("persona_id must be a string");
    if (!j["event_id"].is_number_unsigned()) throw bad("event_id must be a non-negative integer");
    const auto kind = j["kind"].is_string() ? parse_artifact_kind(j["kind"].get<std::string>()) : std::nullopt;
    const auto direction =
        j["direction"].is_string() ? parse_direction(j["direction"].get<std::string>()) : std::nullopt;
    if (!kind) throw bad("unknown kind");
    if (!direction) throw bad("unknown direction");
    return EnvelopeRecord{j["persona_id"].get<std::string>(),
                          Artifact{payload_from_json(*kind, j["payload"]), j["event_id"].get<std::size_t>(), *direction}};
}

std::string to_jsonl(std::string_view persona_id, const std::vector<Artifact>& artifacts) {
    std::string out;
    for (const auto& a : artifacts) out += to_envelope(persona_id, a).dump() + "\n";
    return out;
}

std::size_t export_jsonl(const DigitalFootprint& footprint, const std::filesystem::path& path) {
    write_file(path, to_jsonl(footprint.persona_id, footprint.artifacts));
    return footprint.artifacts.size();
}

std::vector<EnvelopeRecord> load_jsonl(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::vector<EnvelopeRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto j = Json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw Error(ErrorCode::kParseError, path.string() + ":" + std::to_string(line_no) + " is not valid JSON");
        }
        out.push_back(from_envelope(j));
    }
    return out;
}

std::string ics_escape(std::string_view value) {
    std::string out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const char c = value[i];
        switch (c) {
            case '\\': out += "\\\\"; break;
            case ';': out += "\\;"; break;
            case ',': out += "\\,"; break;
            case '\r':
                if (i + 1 < value.size() && value[i + 1] == '\n') ++i;
                out += "\\n";
                break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<std::string> ics_fold(std::string_view line, std::size_t limit) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < line.size() || first) {
        // Continuation lines spend one octet on the leading space.
        const std::size_t budget = first ? limit : limit - 1;
        std::size_t end = std::min(line.size(), pos + budget);
        if (end < line.size()) {
            while (end > pos && (static_cast<unsigned char>(line[end]) & 0xC0) == 0x80) --end;
            if (end == pos) end = std::min(line.size(), pos + budget);
        }
        out.push_back((first ? "" : " ") + std::string(line.substr(pos, end - pos)));
        pos = end;
        first = false;
    }
    return out;
}

std::string to_ics(std::string_view persona_id, const std::vector<Artifact>& artifacts) {
    std::string out;
    auto emit = [&](std::string_view line) {
        for (const auto& piece : ics_fold(line)) out += piece + "\r\n";
    };
    emit("BEGIN:VCALENDAR");
    emit("VERSION:2.0");
    emit("PRODID:-//tracegen//digital footprint//EN");
    emit("CALSCALE:GREGORIAN");
    std::map<std::string, int> seen;
    for (const auto& a : artifacts) {
        const auto* entry = std::get_if<CalendarEntry>(&a.payload);
        if (!entry) continue;
        std::string uid = std::string(persona_id) + ":" + std::to_string(a.event_id);
        if (const int n = ++seen[uid]; n > 1) uid += ":" + std::to_string(n);
        emit("BEGIN:VEVENT");
        emit("UID:" + ics_escape(uid));
        emit("DTSTART:" + entry->start_time.to_ics());
        emit("DTEND:" + entry->end_time.to_ics());
        emit("SUMMARY:" + ics_escape(entry->title));
        if (entry->location && !entry->location->empty()) emit("LOCATION:" + ics_escape(*entry->location));
        emit("END:VEVENT");
    }
    emit("END:VCALENDAR");
    return out;
}

std::size_t export_ics(const DigitalFootprint& footprint, const std::filesystem::path& path) {
    write_file(path, to_ics(footprint.persona_id, footprint.artifacts));
    return static_cast<std::size_t>(std::count_if(footprint.artifacts.begin(), footprint.artifacts.end(),
                                                  [](const Artifact& a) { return a.kind() == ArtifactKind::kCalendarEntry; }));
}

}  // namespace tracegen
