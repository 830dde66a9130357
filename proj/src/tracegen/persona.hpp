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
#include <vector>

#include "tracegen/demographics.hpp"
#include "tracegen/json.hpp"
#include "tracegen/schema.hpp"

namespace tracegen {

class Gateway;
class BudgetScope;

// An alter in the persona's social graph. Only the basic characteristics are
// kept; alters never get full profiles of their own.
struct FamilyMember {
    std::string name;
    std::string age;
    std::string relation;
    std::string occupation;
    std::string address;

    bool operator==(const FamilyMember&) const = default;
};

// The persona. JSON keys match the profile prompt's output contract exactly.
struct PersonaProfile {
    std::string name;
    std::string surname;
    std::string given_name;
    std::optional<std::string> middle_name;
    std::vector<std::string> nicknames;
    std::string locale;
    std::string timezone;
    std::string age;
    std::string gender;
    std::string income;
    std::string ethnicity;
    std::string family_setup;
    std::string nationality;
    std::string email;
    std::string phone;
    std::string eye_color;
    std::string hair_color;
    std::string height;
    std::string weight;
    std::string occupation;
    std::string weekdays_routines;
    std::string weekend_routines;
    std::string life_events_for_holidays_and_vacations;
    std::vector<FamilyMember> family_members;
    std::vector<std::string> friends;
    std::vector<std::string> coworkers;
    std::optional<std::vector<std::string>> classmates;
    std::string home_address;
    std::optional<std::string> office_address;
    std::optional<std::string> school_address;

    Json to_json() const;
    // Lenient field mapping; run validate_profile on the result.
    static PersonaProfile from_json(const Json& j);

    // Names of family, friends, coworkers, and classmates, in that order.
    std::vector<std::string> social_graph() const;
    bool knows(std::string_view person) const;

    bool operator==(const PersonaProfile&) const = default;
};

// Every invariant violation of the profile; empty means valid.
std::vector<Violation> validate_profile(const PersonaProfile& profile);

// Persona Agent. Renders the profile prompt for the draw, extracts and
// validates the profile, and re-prompts once with the violation list before
// giving up with kProfileGenerationFailed (details carry the last violations).
// Attributes present in the draw are pinned onto the returned profile.
PersonaProfile generate_profile(Gateway& gateway, const DemographicDraw& draw, BudgetScope* scope = nullptr);

}  // namespace tracegen
