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

#include "tracegen/schema.hpp"

#include <array>
#include <cctype>

#include "tracegen/datetime.hpp"
#include "tracegen/error.hpp"
#include "tracegen/text.hpp"

namespace tracegen {
namespace {

constexpr std::string_view kProfileSchema = R"({
  "$id": "tracegen/profile/v1",
  "type": "object",
  "required": ["name", "surname", "given_name", "nicknames", "locale", "timezone", "age", "gender",
               "income", "ethnicity", "family_setup", "nationality", "email", "phone", "eye_color",
               "hair_color", "height", "weight", "occupation", "weekdays_routines", "weekend_routines",
               "life_events_for_holidays_and_vacations", "family_members", "friends", "coworkers",
               "home_address"],
  "properties": {
    "name": {"type": "string", "minLength": 1},
    "surname": {"type": "string", "minLength": 1},
    "given_name": {"type": "string", "minLength": 1},
    "middle_name": {"type": "string", "minLength": 1},
    "nicknames": {"type": "array", "items": {"type": "string", "minLength": 1}},
    "locale": {"type": "string", "minLength": 1},
    "timezone": {"type": "string", "minLength": 1},
    "age": {"type": "string", "minLength": 1},
    "gender": {"type": "string", "minLength": 1},
    "income": {"type": "string", "minLength": 1},
    "ethnicity": {"type": "string", "minLength": 1},
    "family_setup": {"type": "string", "minLength": 1},
    "nationality": {"type": "string", "minLength": 1},
    "email": {"type": "string", "format": "email"},
    "phone": {"type": "string", "minLength": 1},
    "eye_color": {"enum": ["black", "blue", "brown", "gold", "gray", "green", "silver", "white"]},
    "hair_color": {"enum": ["black", "blue", "brown", "gold", "gray", "green", "silver", "white"]},
    "height": {"type": "string", "minLength": 1},
    "weight": {"type": "string", "minLength": 1},
    "occupation": {"type": "string", "minLength": 1},
    "weekdays_routines": {"type": "string", "minLength": 1},
    "weekend_routines": {"type": "string", "minLength": 1},
    "life_events_for_holidays_and_vacations": {"type": "string", "minLength": 1},
    "family_members": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "age", "relation", "occupation", "address"],
        "properties": {
          "name": {"type": "string", "minLength": 1},
          "age": {"type": ["string", "integer"]},
          "relation": {"type": "string", "minLength": 1},
          "occupation": {"type": "string", "minLength": 1},
          "address": {"type": "string", "minLength": 1}
        }
      }
    },
    "friends": {"type": "array", "minItems": 5, "maxItems": 5, "items": {"type": "string", "minLength": 1}},
    "coworkers": {"type": "array", "minItems": 8, "maxItems": 8, "items": {"type": "string", "minLength": 1}},
    "classmates": {"type": "array", "minItems": 10, "maxItems": 10, "items": {"type": "string", "minLength": 1}},
    "home_address": {"type": "string", "minLength": 1},
    "office_address": {"type": "string", "minLength": 1},
    "school_address": {"type": "string", "minLength": 1}
  }
})";

constexpr std::string_view kSeedEventSchema = R"({
  "$id": "tracegen/seed_event/v1",
  "type": "object",
  "required": ["event", "detailed_description", "frequency"],
  "properties": {
    "event": {"type": "string", "minLength": 1},
    "detailed_description": {"type": "string"},
    "frequency": {"enum": ["daily", "weekly", "monthly", "seasonally", "yearly", "once"]}
  }
})";

// Items are validated one by one so a single bad entry does not sink the list.
constexpr std::string_view kSeedEventListSchema = R"({
  "$id": "tracegen/seed_event_list/v1",
  "type": "array",
  "items": {"type": "object"}
})";

constexpr std::string_view kExpandedEventSchema = R"({
  "$id": "tracegen/expanded_event/v1",
  "type": "object",
  "required": ["event", "detailed_description", "frequency", "location", "other_participants",
               "start_time", "end_time"],
  "properties": {
    "event": {"type": "string", "minLength": 1},
    "detailed_description": {"type": "string"},
    "frequency": {"enum": ["daily", "weekly", "monthly", "seasonally", "yearly", "once"]},
    "location": {"type": "string"},
    "other_participants": {"type": ["array", "string"], "items": {"type": "string"}},
    "start_time": {"type": "string", "format": "local-date-time"},
    "end_time": {"type": "string", "format": "local-date-time"}
  }
})";

constexpr std::string_view kExpandedEventListSchema = R"({
  "$id": "tracegen/expanded_event_list/v1",
  "type": "array",
  "items": {"type": "object"}
})";

constexpr std::string_view kReflectionSchema = R"({
  "$id": "tracegen/reflection/v1",
  "type": "object",
  "required": ["verdict"],
  "properties": {
    "verdict": {"enum": ["approve", "revise"]},
    "event": {"type": "object"}
  }
})";

constexpr std::string_view kArtifactChoiceSchema = R"({
  "$id": "tracegen/artifact_choice/v1",
  "type": "object",
  "required": ["kind", "direction"],
  "properties": {
    "kind": {"enum": ["email", "message_thread", "calendar_entry", "reminder", "wallet_pass"]},
    "direction": {"enum": ["sent", "received"]}
  }
})";

constexpr std::string_view kEmailSchema = R"({
  "$id": "tracegen/email/v1",
  "type": "object",
  "required": ["sender_name", "from_address", "to_address", "send_time", "subject", "body"],
  "additionalProperties": false,
  "properties": {
    "sender_name": {"type": "string", "minLength": 1},
    "from_address": {"type": "string", "format": "email"},
    "to_address": {"type": "string", "format": "email"},
    "send_time": {"type": "string", "format": "local-date-time"},
    "subject": {"type": "string", "minLength": 1},
    "body": {"type": "string", "minLength": 1}
  }
})";

constexpr std::string_view kMessageThreadSchema = R"({
  "$id": "tracegen/message_thread/v1",
  "type": "object",
  "required": ["participants", "messages"],
  "properties": {
    "participants": {"type": "array", "minItems": 2, "items": {"type": "string", "minLength": 1}},
    "messages": {
      "type": "array",
      "minItems": 1,
      "items": {
        "type": "object",
        "required": ["sender", "send_time", "text"],
        "properties": {
          "sender": {"type": "string", "minLength": 1},
          "send_time": {"type": "string", "format": "local-date-time"},
          "text": {"type": "string", "minLength": 1}
        }
      }
    }
  }
})";

constexpr std::string_view kCalendarEntrySchema = R"({
  "$id": "tracegen/calendar_entry/v1",
  "type": "object",
  "required": ["title", "start_time", "end_time", "attendees"],
  "properties": {
    "title": {"type": "string", "minLength": 1},
    "start_time": {"type": "string", "format": "local-date-time"},
    "end_time": {"type": "string", "format": "local-date-time"},
    "location": {"type": "string"},
    "attendees": {"type": "array", "items": {"type": "string", "minLength": 1}}
  }
})";

constexpr std::string_view kReminderSchema = R"({
  "$id": "tracegen/reminder/v1",
  "type": "object",
  "required": ["title", "due_time"],
  "properties": {
    "title": {"type": "string", "minLength": 1},
    "due_time": {"type": "string", "format": "local-date-time"},
    "note": {"type": "string"}
  }
})";

constexpr std::string_view kWalletPassSchema = R"({
  "$id": "tracegen/wallet_pass/v1",
  "type": "object",
  "required": ["pass_kind", "title", "reference_code", "valid_from", "valid_until"],
  "properties": {
    "pass_kind": {"enum": ["boarding_pass", "ticket", "membership", "coupon"]},
    "title": {"type": "string", "minLength": 1},
    "reference_code": {"type": "string", "minLength": 1},
    "valid_from": {"type": "string", "format": "local-date-time"},
    "valid_until": {"type": "string", "format": "local-date-time"}
  }
})";

constexpr std::string_view kCritiqueSchema = R"({
  "$id": "tracegen/critique/v1",
  "type": "object",
  "required": ["verdict", "feedback"],
  "properties": {
    "verdict": {"enum": ["approve", "revise"]},
    "feedback": {"type": "string"}
  }
})";

constexpr std::string_view kJudgeSchema = R"({
  "$id": "tracegen/judge/v1",
  "type": "object",
  "required": ["Tone", "Fluency", "Coherence", "Informativeness", "Engagement", "Overall"],
  "properties": {
    "Tone": {"type": "object", "required": ["score", "explanation"],
             "properties": {"score": {"type": "number", "minimum": 1, "maximum": 5}, "explanation": {"type": "string"}}},
    "Fluency": {"type": "object", "required": ["score", "explanation"],
                "properties": {"score": {"type": "number", "minimum": 1, "maximum": 5}, "explanation": {"type": "string"}}},
    "Coherence": {"type": "object", "required": ["score", "explanation"],
                  "properties": {"score": {"type": "number", "minimum": 1, "maximum": 5}, "explanation": {"type": "string"}}},
    "Informativeness": {"type": "object", "required": ["score", "explanation"],
                        "properties": {"score": {"type": "number", "minimum": 1, "maximum": 5}, "explanation": {"type": "string"}}},
    "Engagement": {"type": "object", "required": ["score", "explanation"],
                   "properties": {"score": {"type": "number", "minimum": 1, "maximum": 5}, "explanation": {"type": "string"}}},
    "Overall": {"type": "object", "required": ["score", "summary"],
                "properties": {"score": {"type": "number", "minimum": 1, "maximum": 5}, "summary": {"type": "string"}}}
  }
})";

struct Entry {
    SchemaId id;
    std::string_view name;
    std::string_view source;
};

constexpr std::array<Entry, 14> kEntries = {{
    {SchemaId::kProfile, "profile", kProfileSchema},
    {SchemaId::kSeedEvent, "seed_event", kSeedEventSchema},
    {SchemaId::kSeedEventList, "seed_event_list", kSeedEventListSchema},
    {SchemaId::kExpandedEvent, "expanded_event", kExpandedEventSchema},
    {SchemaId::kExpandedEventList, "expanded_event_list", kExpandedEventListSchema},
    {SchemaId::kReflection, "reflection", kReflectionSchema},
    {SchemaId::kArtifactChoice, "artifact_choice", kArtifactChoiceSchema},
    {SchemaId::kEmail, "email", kEmailSchema},
    {SchemaId::kMessageThread, "message_thread", kMessageThreadSchema},
    {SchemaId::kCalendarEntry, "calendar_entry", kCalendarEntrySchema},
    {SchemaId::kReminder, "reminder", kReminderSchema},
    {SchemaId::kWalletPass, "wallet_pass", kWalletPassSchema},
    {SchemaId::kCritique, "critique", kCritiqueSchema},
    {SchemaId::kJudge, "judge", kJudgeSchema},
}};

const Entry& entry(SchemaId id) {
    for (const auto& e : kEntries) {
        if (e.id == id) return e;
    }
    throw Error(ErrorCode::kInternal, "unregistered schema");
}

std::string type_of(const Json& v) {
    if (v.is_object()) return "object";
    if (v.is_array()) return "array";
    if (v.is_string()) return "string";
    if (v.is_boolean()) return "boolean";
    if (v.is_null()) return "null";
    if (v.is_number_integer()) return "integer";
    return "number";
}

bool type_matches(const std::string& want, const Json& v) {
    if (want == "number") return v.is_number();
    if (want == "integer") {
        if (v.is_number_integer()) return true;
        if (v.is_number_float()) {
            const double d = v.get<double>();
            return d == static_cast<double>(static_cast<long long>(d));
        }
        return false;
    }
    return type_of(v) == want;
}

std::string child_path(const std::string& base, std::string_view key) {
    return base.empty() ? std::string(key) : base + "." + std::string(key);
}

void check(const Json& schema, const Json& value, const std::string& path, std::vector<Violation>& out) {
    if (auto t = schema.find("type"); t != schema.end()) {
        bool ok = false;
        std::string expected;
        if (t->is_array()) {
            for (const auto& alt : *t) {
                ok = ok || type_matches(alt.get<std::string>(), value);
                expected += (expected.empty() ? "" : " or ") + alt.get<std::string>();
            }
        } else {
            expected = t->get<std::string>();
            ok = type_matches(expected, value);
        }
        if (!ok) {
            out.push_back({path, "expected " + expected + ", got " + type_of(value)});
            return;
        }
    }
    if (auto e = schema.find("enum"); e != schema.end()) {
        bool found = false;
        for (const auto& allowed : *e) found = found || allowed == value;
        if (!found) {
            out.push_back({path, "value " + value.dump() + " not in " + e->dump()});
            return;
        }
    }
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        if (auto m = schema.find("minLength"); m != schema.end()) {
            if (text::codepoint_count(text::trim(s)) < m->get<std::size_t>()) {
                out.push_back({path, "must be non-empty"});
            }
        }
        if (auto f = schema.find("format"); f != schema.end()) {
            const auto& format = f->get_ref<const std::string&>();
            if (format == "email" && !is_valid_email_address(s)) {
                out.push_back({path, "malformed email address \"" + s + "\""});
            } else if (format == "local-date-time" && !is_local_datetime(s)) {
                out.push_back({path, "not an RFC 3339 date-time without zone: \"" + s + "\""});
            }
        }
    }
    if (value.is_number()) {
        const double d = value.get<double>();
        if (auto m = schema.find("minimum"); m != schema.end() && d < m->get<double>()) {
            out.push_back({path, "value " + value.dump() + " below minimum " + m->dump()});
        }
        if (auto m = schema.find("maximum"); m != schema.end() && d > m->get<double>()) {
            out.push_back({path, "value " + value.dump() + " above maximum " + m->dump()});
        }
    }
    if (value.is_array()) {
        const auto n = value.size();
        const auto min_items = schema.value("minItems", std::size_t{0});
        const auto max_items = schema.value("maxItems", SIZE_MAX);
        if (min_items == max_items && n != min_items) {
            out.push_back({path, "expected exactly " + std::to_string(min_items) + " items, got " + std::to_string(n)});
        } else if (n < min_items) {
            out.push_back({path, "expected at least " + std::to_string(min_items) + " items, got " + std::to_string(n)});
        } else if (n > max_items) {
            out.push_back({path, "expected at most " + std::to_string(max_items) + " items, got " + std::to_string(n)});
        }
        if (auto items = schema.find("items"); items != schema.end()) {
            for (std::size_t i = 0; i < n; ++i) {
                check(*items, value[i], path + "[" + std::to_string(i) + "]", out);
            }
        }
    }
    if (value.is_object()) {
        if (auto req = schema.find("required"); req != schema.end()) {
            for (const auto& key : *req) {
                const auto& k = key.get_ref<const std::string&>();
                if (!value.contains(k)) out.push_back({child_path(path, k), "missing required field"});
            }
        }
        const auto props = schema.find("properties");
        const bool closed = schema.contains("additionalProperties") && !schema["additionalProperties"].get<bool>();
        for (const auto& [k, v] : value.items()) {
            if (props != schema.end() && props->contains(k)) {
                check((*props)[k], v, child_path(path, k), out);
            } else if (closed) {
                out.push_back({child_path(path, k), "unexpected field"});
            }
        }
    }
}

}  // namespace

std::string_view schema_name(SchemaId id) { return entry(id).name; }

std::optional<SchemaId> schema_from_name(std::string_view name) {
    for (const auto& e : kEntries) {
        if (e.name == name) return e.id;
    }
    return std::nullopt;
}

const Json& schema_document(SchemaId id) {
    static const auto documents = [] {
        std::array<Json, kEntries.size()> docs;
        for (std::size_t i = 0; i < kEntries.size(); ++i) docs[i] = Json::parse(kEntries[i].source);
        return docs;
    }();
    for (std::size_t i = 0; i < kEntries.size(); ++i) {
        if (kEntries[i].id == id) return documents[i];
    }
    throw Error(ErrorCode::kInternal, "unregistered schema");
}

std::vector<Violation> validate_against(const Json& schema, const Json& value) {
    std::vector<Violation> out;
    check(schema, value, "", out);
    return out;
}

std::vector<Violation> validate(SchemaId id, const Json& value) { return validate_against(schema_document(id), value); }

bool is_valid_email_address(std::string_view address) {
    const auto at = address.find('@');
    if (at == std::string_view::npos || address.find('@', at + 1) != std::string_view::npos) return false;
    const auto local = address.substr(0, at);
    const auto domain = address.substr(at + 1);
    if (local.empty() || local.size() > 64 || domain.empty() || domain.size() > 253) return false;
    if (local.front() == '.' || local.back() == '.' || local.find("..") != std::string_view::npos) return false;
    static constexpr std::string_view kLocalSpecials = "!#$%&'*+/=?^_`{|}~-.";
    for (char c : local) {
        const auto u = static_cast<unsigned char>(c);
        if (u >= 0x80 || std::isalnum(u)) continue;  // UTF-8 local parts are allowed
        if (kLocalSpecials.find(c) == std::string_view::npos) return false;
    }
    std::size_t labels = 0;
    std::string_view last_label;
    std::size_t start = 0;
    while (start <= domain.size()) {
        auto end = domain.find('.', start);
        if (end == std::string_view::npos) end = domain.size();
        const auto label = domain.substr(start, end - start);
        if (label.empty() || label.size() > 63 || label.front() == '-' || label.back() == '-') return false;
        for (char c : label) {
            const auto u = static_cast<unsigned char>(c);
            if (!(u >= 0x80 || std::isalnum(u) || c == '-')) return false;
        }
        ++labels;
        last_label = label;
        start = end + 1;
    }
    if (labels < 2 || last_label.size() < 2) return false;
    for (char c : last_label) {
        if (std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> to_strings(const std::vector<Violation>& violations) {
    std::vector<std::string> out;
    out.reserve(violations.size());
    for (const auto& v : violations) out.push_back(v.to_string());
    return out;
}

}  // namespace tracegen
