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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tracegen/datetime.hpp"
#include "tracegen/json.hpp"
#include "tracegen/schema.hpp"

namespace tracegen {

enum class ArtifactKind { kEmail, kMessageThread, kCalendarEntry, kReminder, kWalletPass };
enum class Direction { kSent, kReceived };
enum class PassKind { kBoardingPass, kTicket, kMembership, kCoupon };

inline constexpr ArtifactKind kAllArtifactKinds[] = {ArtifactKind::kEmail, ArtifactKind::kMessageThread,
                                                     ArtifactKind::kCalendarEntry, ArtifactKind::kReminder,
                                                     ArtifactKind::kWalletPass};

std::string_view to_string(ArtifactKind k);
std::string_view to_string(Direction d);
std::string_view to_string(PassKind p);
std::optional<ArtifactKind> parse_artifact_kind(std::string_view s);
std::optional<Direction> parse_direction(std::string_view s);
std::optional<PassKind> parse_pass_kind(std::string_view s);
SchemaId schema_for(ArtifactKind k);
// "email", "text message exchange", ... for prompt wording.
std::string_view display_name(ArtifactKind k);

struct Email {
    std::string sender_name;
    std::string from_address;
    std::string to_address;
    LocalDateTime send_time;
    std::string subject;
    std::string body;

    bool operator==(const Email&) const = default;
};

struct ThreadMessage {
    std::string sender;
    LocalDateTime send_time;
    std::string text;

    bool operator==(const ThreadMessage&) const = default;
};

struct MessageThread {
    std::vector<std::string> participants;
    std::vector<ThreadMessage> messages;

    bool operator==(const MessageThread&) const = default;
};

struct CalendarEntry {
    std::string title;
    LocalDateTime start_time;
    LocalDateTime end_time;
    std::optional<std::string> location;
    std::vector<std::string> attendees;

    bool operator==(const CalendarEntry&) const = default;
};

struct Reminder {
    std::string title;
    LocalDateTime due_time;
    std::optional<std::string> note;

    bool operator==(const Reminder&) const = default;
};

struct WalletPass {
    PassKind pass_kind = PassKind::kTicket;
    std::string title;
    std::string reference_code;
    LocalDateTime valid_from;
    LocalDateTime valid_until;

    bool operator==(const WalletPass&) const = default;
};

// Alternative order matches ArtifactKind.
using ArtifactPayload = std::variant<Email, MessageThread, CalendarEntry, Reminder, WalletPass>;

struct Artifact {
    ArtifactPayload payload;
    std::size_t event_id = 0;  // node id in the owning persona's event forest
    Direction direction = Direction::kReceived;

    ArtifactKind kind() const { return static_cast<ArtifactKind>(payload.index()); }

    // Timeline sort key: email send time, first message of a thread, calendar
    // start, reminder due time, pass valid_from.
    LocalDateTime primary_time() const;

    bool operator==(const Artifact&) const = default;
};

Json payload_to_json(const ArtifactPayload& payload);

// Schema check plus the variant's cross-field invariants (start <= end,
// senders within participants, non-decreasing message times).
std::vector<Violation> validate_payload(ArtifactKind kind, const Json& j);

// Throws kSchemaViolation.
ArtifactPayload payload_from_json(ArtifactKind kind, const Json& j);

// Plain text of the artifact as a document for corpus metrics: the body of an
// email, the joined texts of a thread, and title-plus-details otherwise.
std::string document_text(const Artifact& artifact);

enum class CriticAxis { kEventConsistency, kPersonaConsistency, kRealismFluency };
enum class Verdict { kApprove, kRevise };

inline constexpr CriticAxis kAllCriticAxes[] = {CriticAxis::kEventConsistency, CriticAxis::kPersonaConsistency,
                                                CriticAxis::kRealismFluency};

std::string_view to_string(CriticAxis a);
std::string_view to_string(Verdict v);

struct Critique {
    CriticAxis axis = CriticAxis::kEventConsistency;
    Verdict verdict = Verdict::kApprove;
    std::string feedback;  // non-empty when verdict is revise

    bool operator==(const Critique&) const = default;
};

}  // namespace tracegen
