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

#include "tracegen/persona.hpp"

#include <algorithm>

#include "tracegen/error.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/prompts.hpp"

namespace tracegen {
namespace {

std::string* pinned_field(PersonaProfile& p, std::string_view attribute) {
    if (attribute == "locale") return &p.locale;
    if (attribute == "timezone") return &p.timezone;
    if (attribute == "age") return &p.age;
    if (attribute == "gender") return &p.gender;
    if (attribute == "income") return &p.income;
    if (attribute == "ethnicity") return &p.ethnicity;
    if (attribute == "family_setup") return &p.family_setup;
    if (attribute == "nationality") return &p.nationality;
    return nullptr;
}

}  // namespace

Json PersonaProfile::to_json() const {
    Json j;
    j["name"] = name;
    j["surname"] = surname;
    j["given_name"] = given_name;
    if (middle_name) j["middle_name"] = *middle_name;
    j["nicknames"] = nicknames;
    j["locale"] = locale;
    j["timezone"] = timezone;
    j["age"] = age;
    j["gender"] = gender;
    j["income"] = income;
    j["ethnicity"] = ethnicity;
    j["family_setup"] = family_setup;
    j["nationality"] = nationality;
    j["email"] = email;
    j["phone"] = phone;
    j["eye_color"] = eye_color;
    j["hair_color"] = hair_color;
    j["height"] = height;
    j["weight"] = weight;
    j["occupation"] = occupation;
    j["weekdays_routines"] = weekdays_routines;
    j["weekend_routines"] = weekend_routines;
    j["life_events_for_holidays_and_vacations"] = life_events_for_holidays_and_vacations;
    Json family = Json::array();
    for (const auto& m : family_members) {
        family.push_back(Json{{"name", m.name},
                              {"age", m.age},
                              {"relation", m.relation},
                              {"occupation", m.occupation},
                              {"address", m.address}});
    }
    j["family_members"] = std::move(family);
    j["friends"] = friends;
    j["coworkers"] = coworkers;
    if (classmates) j["classmates"] = *classmates;
    j["home_address"] = home_address;
    if (office_address) j["office_address"] = *office_address;
    if (school_address) j["school_address"] = *school_address;
    return j;
}

PersonaProfile PersonaProfile::from_json(const Json& j) {
    PersonaProfile p;
    auto opt = [&](const char* key) -> std::optional<std::string> {
        if (!j.is_object() || !j.contains(key) || j[key].is_null()) return std::nullopt;
        return json_string(j, key);
    };
    p.name = json_string(j, "name");
    p.surname = json_string(j, "surname");
    p.given_name = json_string(j, "given_name");
    p.middle_name = opt("middle_name");
    p.nicknames = json_string_list(j, "nicknames");
    p.locale = json_string(j, "locale");
    p.timezone = json_string(j, "timezone");
    p.age = json_string(j, "age");
    p.gender = json_string(j, "gender");
    p.income = json_string(j, "income");
    p.ethnicity = json_string(j, "ethnicity");
    p.family_setup = json_string(j, "family_setup");
    p.nationality = json_string(j, "nationality");
    p.email = json_string(j, "email");
    p.phone = json_string(j, "phone");
    p.eye_color = json_string(j, "eye_color");
    p.hair_color = json_string(j, "hair_color");
    p.height = json_string(j, "height");
    p.weight = json_string(j, "weight");
    p.occupation = json_string(j, "occupation");
    p.weekdays_routines = json_string(j, "weekdays_routines");
    p.weekend_routines = json_string(j, "weekend_routines");
    p.life_events_for_holidays_and_vacations = json_string(j, "life_events_for_holidays_and_vacations");
    if (j.is_object() && j.contains("family_members") && j["family_members"].is_array()) {
        for (const auto& m : j["family_members"]) {
            p.family_members.push_back(FamilyMember{json_string(m, "name"), json_string(m, "age"),
                                                    json_string(m, "relation"), json_string(m, "occupation"),
                                                    json_string(m, "address")});
        }
    }
    p.friends = json_string_list(j, "friends");
    p.coworkers = json_string_list(j, "coworkers");
    if (j.is_object() && j.contains("classmates") && j["classmates"].is_array()) {
        p.classmates = json_string_list(j, "classmates");
    }
    p.home_address = json_string(j, "home_address");
    p.office_address = opt("office_address");
    p.school_address = opt("school_address");
    return p;
}

std::vector<std::string> PersonaProfile::social_graph() const {
    std::vector<std::string> out;
    for (const auto& m : family_members) out.push_back(m.name);
    out.insert(out.end(), friends.begin(), friends.end());
    out.insert(out.end(), coworkers.begin(), coworkers.end());
    if (classmates) out.insert(out.end(), classmates->begin(), classmates->end());
    return out;
}

bool PersonaProfile::knows(std::string_view person) const {
    const auto graph = social_graph();
    return std::find(graph.begin(), graph.end(), person) != graph.end();
}

std::vector<Violation> validate_profile(const PersonaProfile& profile) {
    return validate(SchemaId::kProfile, profile.to_json());
}

PersonaProfile generate_profile(Gateway& gateway, const DemographicDraw& draw, BudgetScope* scope) {
    const auto request = prompts::profile(draw.to_json());
    Json raw;
    try {
        raw = gateway.complete_json(request, SchemaId::kProfile, {}, scope);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoJsonFound && e.code() != ErrorCode::kSchemaViolation) throw;
        auto details = e.details();
        if (details.empty()) details.push_back(e.what());
        throw Error(ErrorCode::kProfileGenerationFailed, "profile generation failed after one repair", details);
    }
    auto profile = PersonaProfile::from_json(raw);
    for (const auto& [attribute, value] : draw.attributes) {
        if (auto* field = pinned_field(profile, attribute)) *field = value;
    }
    auto violations = validate_profile(profile);
    if (!violations.empty()) {
        throw Error(ErrorCode::kProfileGenerationFailed, "profile violates invariants", to_strings(violations));
    }
    return profile;
}

}  // namespace tracegen
