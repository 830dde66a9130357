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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tracegen/artifact.hpp"
#include "tracegen/persona.hpp"

namespace tracegen {

// Event types of the template baseline. Slots: time and location for all;
// participants for appointment, ticketed_show and work_meeting; amount for
// bill, online_shopping and ticketed_show.
enum class TemplateKind { kAppointment, kBill, kOnlineShopping, kTicketedShow, kWorkMeeting };

inline constexpr std::array kAllTemplateKinds = {TemplateKind::kAppointment, TemplateKind::kBill,
                                                 TemplateKind::kOnlineShopping, TemplateKind::kTicketedShow,
                                                 TemplateKind::kWorkMeeting};

std::string_view to_string(TemplateKind k);

// Template-filled emails cycling through kAllTemplateKinds. Slot values come
// from the profile and a PRNG seeded with `seed`; no model is involved.
// Artifact i has event_id i. count == 0 gives an empty list.
std::vector<Artifact> generate_ablated(const PersonaProfile& profile, std::size_t count, std::uint64_t seed);

}  // namespace tracegen
