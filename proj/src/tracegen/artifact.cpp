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

#include "tracegen/artifact.hpp"

#include <algorithm>

#include "tracegen/error.hpp"

namespace tracegen {

std::string_view to_string(ArtifactKind k) {
    switch (k) {
        case ArtifactKind::kEmail: return "email";
        case ArtifactKind::kMessageThread: return "message_thread";
        case ArtifactKind::kCalendarEntry: return "calendar_entry";
        case ArtifactKind::kReminder: return "reminder";
        case ArtifactKind::kWalletPass: return "wallet_pass";
    }
    return "email";
}

std::string_view display_name(ArtifactKind k) {
    switch (k) {
        case ArtifactKind::kEmail: return "email";
        case ArtifactKind::kMessageThread: return "text message exchange";
        case ArtifactKind::kCalendarEntry: return "calendar invitation";
        case ArtifactKind::kReminder: return "reminder";
        case ArtifactKind::kWalletPass: return "wallet pass";
    }
    return "email";
}

std::string_view to_string(Direction d) { return d == Direction::kSent ? "sent" : "received"; }

std::string_view to_string(PassKind p) {
    switch (p) {
        case PassKind::kBoardingPass: return "boarding_pass";
        case PassKind::kTicket: return "ticket";
        case PassKind::kMembership: return "membership";
        case PassKind::kCoupon: return "coupon";
    }
    return "ticket";
}

std::optional<ArtifactKind> parse_artifact_kind(std::string_view s) {
    for (auto k : kAllArtifactKinds) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view s) {
    if (s == "sent") return Direction::kSent;
    if (s == "received") return Direction::kReceived;
    return std::nullopt;
}

std::optional<PassKind> parse_pass_kind(std::string_view s) {
    for (auto p : {PassKind::kBoardingPass, PassKind::kTicket, PassKind::kMembership, PassKind::kCoupon}) {
        if (to_string(p) == s) return p;
    }
    return std::nullopt;
}

SchemaId schema_for(ArtifactKind k) {
    switch (k) {
        case ArtifactKind::kEmail: return SchemaId::kEmail;
        case ArtifactKind::kMessageThread: return SchemaId::kMessageThread;
        case ArtifactKind::kCalendarEntry: return SchemaId::kCalendarEntry;
        case ArtifactKind::kReminder: return SchemaId::kReminder;
        case ArtifactKind::kWalletPass: return SchemaId::kWalletPass;
    }
    return SchemaId::kEmail;
}

std::string_view to_string(CriticAxis a) {
    switch (a) {
        case CriticAxis::kEventConsistency: return "event_consistency";
        case CriticAxis::kPersonaConsistency: return "persona_consistency";
        case CriticAxis::kRealismFluency: return "realism_fluency";
    }
    return "event_consistency";
}

std::string_view to_string(Verdict v) { return v == Verdict::kApprove ? "approve" : "revise"; }

LocalDateTime Artifact::primary_time() const {
    struct Visitor {
        LocalDateTime operator()(const Email& e) const { return e.send_time; }
        LocalDateTime operator()(const MessageThread& t) const {
            return t.messages.empty() ? LocalDateTime{} : t.messages.front().send_time;
        }
        LocalDateTime operator()(const CalendarEntry& c) const { return c.start_time; }
        LocalDateTime operator()(const Reminder& r) const { return r.due_time; }
        LocalDateTime operator()(const WalletPass& w) const { return w.valid_from; }
    };
    return std::visit(Visitor{}, payload);
}

Json payload_to_json(const ArtifactPayload& payload) {
    struct Visitor {
        Json operator()(const Email& e) const {
            return Json{{"sender_name", e.sender_name}, {"from_address", e.from_address},
                        {"to_address", e.to_address},   {"send_time", e.send_time.to_string()},
                        {"subject", e.subject},         {"body", e.body}};
        }
        Json operator()(const MessageThread& t) const {
            Json messages = Json::array();
            for (const auto& m : t.messages) {
                messages.push_back(
                    Json{{"sender", m.sender}, {"send_time", m.send_time.to_string()}, {"text", m.text}});
            }
            return Json{{"participants", t.participants}, {"messages", std::move(messages)}};
        }
        Json operator()(const CalendarEntry& c) const {
            Json j{{"title", c.title}, {"start_time", c.start_time.to_string()}, {"end_time", c.end_time.to_string()}};
            if (c.location) j["location"] = *c.location;
            j["attendees"] = c.attendees;
            return j;
        }
        Json operator()(const Reminder& r) const {
            Json j{{"title", r.title}, {"due_time", r.due_time.to_string()}};
            if (r.note) j["note"] = *r.note;
            return j;
        }
        Json operator()(const WalletPass& w) const {
            return Json{{"pass_kind", to_string(w.pass_kind)},
                        {"title", w.title},
                        {"reference_code", w.reference_code},
                        {"valid_from", w.valid_from.to_string()},
                        {"valid_until", w.valid_until.to_string()}};
        }
    };
    return std::visit(Visitor{}, payload);
}

namespace {

LocalDateTime time_of(const Json& j, const char* key) { return *LocalDateTime::parse(j[key].get<std::string>()); }

}  // namespace

std::vector<Violation> validate_payload(ArtifactKind kind, const Json& j) {
    auto violations = validate(schema_for(kind), j);
    if (!violations.empty()) return violations;
    switch (kind) {
        case ArtifactKind::kMessageThread: {
            const auto& participants = j["participants"];
            std::optional<LocalDateTime> previous;
            for (std::size_t i = 0; i < j["messages"].size(); ++i) {
                const auto& m = j["messages"][i];
                const auto path = "messages[" + std::to_string(i) + "]";
                if (std::find(participants.begin(), participants.end(), m["sender"]) == participants.end()) {
                    violations.push_back({path + ".sender", "sender is not a participant"});
                }
                const auto t = time_of(m, "send_time");
                if (previous && t < *previous) violations.push_back({path + ".send_time", "timestamps must not decrease"});
                previous = t;
            }
            break;
        }
        case ArtifactKind::kCalendarEntry:
            if (time_of(j, "end_time") < time_of(j, "start_time")) {
                violations.push_back({"end_time", "end_time precedes start_time"});
            }
            break;
        case ArtifactKind::kWalletPass:
            if (time_of(j, "valid_until") < time_of(j, "valid_from")) {
                violations.push_back({"valid_until", "valid_until precedes valid_from"});
            }
            break;
        case ArtifactKind::kEmail:
        case ArtifactKind::kReminder: break;
    }
    return violations;
}

ArtifactPayload payload_from_json(ArtifactKind kind, const Json& j) {
    const auto violations = validate_payload(kind, j);
    if (!violations.empty()) {
        throw Error(ErrorCode::kSchemaViolation, "invalid " + std::string(to_string(kind)), to_strings(violations));
    }
    switch (kind) {
        case ArtifactKind::kEmail:
            return Email{j["sender_name"].get<std::string>(), j["from_address"].get<std::string>(),
                         j["to_address"].get<std::string>(),  time_of(j, "send_time"),
                         j["subject"].get<std::string>(),     j["body"].get<std::string>()};
        case ArtifactKind::kMessageThread: {
            MessageThread t;
            t.participants = j["participants"].get<std::vector<std::string>>();
            for (const auto& m : j["messages"]) {
                t.messages.push_back(
                    ThreadMessage{m["sender"].get<std::string>(), time_of(m, "send_time"), m["text"].get<std::string>()});
            }
            return t;
        }
        case ArtifactKind::kCalendarEntry: {
            CalendarEntry c;
            c.title = j["title"].get<std::string>();
            c.start_time = time_of(j, "start_time");
            c.end_time = time_of(j, "end_time");
            if (j.contains("location")) c.location = j["location"].get<std::string>();
            c.attendees = j["attendees"].get<std::vector<std::string>>();
            return c;
        }
        case ArtifactKind::kReminder: {
            Reminder r;
            r.title = j["title"].get<std::string>();
            r.due_time = time_of(j, "due_time");
            if (j.contains("note")) r.note = j["note"].get<std::string>();
            return r;
        }
        case ArtifactKind::kWalletPass:
            return WalletPass{*parse_pass_kind(j["pass_kind"].get<std::string>()), j["title"].get<std::string>(),
                              j["reference_code"].get<std::string>(), time_of(j, "valid_from"),
                              time_of(j, "valid_until")};
    }
    throw Error(ErrorCode::kInternal, "unknown artifact kind");
}

std::string document_text(const Artifact& artifact) {
    struct Visitor {
        std::string operator()(const Email& e) const { return e.body; }
        std::string operator()(const MessageThread& t) const {
            std::string out;
            for (const auto& m : t.messages) {
                if (!out.empty()) out += "\n";
                out += m.text;
            }
            return out;
        }
        std::string operator()(const CalendarEntry& c) const {
            std::string out = c.title;
            if (c.location && !c.location->empty()) out += "\n" + *c.location;
            return out;
        }
        std::string operator()(const Reminder& r) const { return r.note ? r.title + "\n" + *r.note : r.title; }
        std::string operator()(const WalletPass& w) const { return w.title + "\n" + w.reference_code; }
    };
    return std::visit(Visitor{}, artifact.payload);
}

}  // namespace tracegen
