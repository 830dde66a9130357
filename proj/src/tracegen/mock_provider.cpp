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

#include "tracegen/mock_provider.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <regex>

#include "tracegen/datetime.hpp"
#include "tracegen/events.hpp"
#include "tracegen/json_extract.hpp"
#include "tracegen/prompts.hpp"
#include "tracegen/random.hpp"
#include "tracegen/text.hpp"

namespace tracegen {
namespace {

constexpr std::array kGivenNames = {
    "Maya",  "Daniel", "Priya",  "Lucas",  "Amara",  "Kenji",   "Sofia", "Mateo",  "Leila", "Owen",
    "Hana",  "Marcus", "Elena",  "Tomas",  "Aisha",  "Ravi",    "Grace", "Diego",  "Nina",  "Samuel",
    "Chloe", "Andre",  "Mei",    "Jonah",  "Fatima", "Ethan",   "Zoe",   "Kwame",  "Irene", "Noah",
    "Lena",  "Victor", "Yara",   "Felix",  "Naomi",  "Hugo",    "Iris",  "Caleb",  "Rosa",  "Omar"};
constexpr std::array kSurnames = {
    "Patel",   "Nguyen",  "Garcia",  "Okafor",   "Tanaka",  "Schmidt", "Rossi",  "Kowalski", "Haddad",
    "Bennett", "Morales", "Kim",     "Fischer",  "Mensah",  "Silva",   "Cohen",  "Larsen",   "Dubois",
    "Reyes",   "Murphy",  "Sato",    "Novak",    "Ibrahim", "Carter",  "Lopez",  "Walsh",    "Chen",
    "Alvarez", "Brooks",  "Yilmaz",  "Petrov",   "Hughes",  "Romero",  "Singh",  "Foster",   "Moreau"};
constexpr std::array kOccupations = {
    "high school chemistry teacher",    "registered nurse in a pediatric ward", "backend software engineer",
    "independent bakery owner",         "civil engineer at a transit agency",   "graduate student in computer science",
    "dental hygienist",                 "logistics coordinator for a retailer", "freelance graphic designer",
    "public library branch manager",    "electrician running a small crew",     "accountant at a regional firm",
    "physical therapist",               "marketing analyst",                    "city bus driver",
    "veterinary technician",            "restaurant sous chef",                 "real estate agent",
    "social worker for a county agency", "research scientist in climate modeling"};
constexpr std::array kStreets = {"Maple Avenue", "Cedar Street", "Harbor Road", "Lincoln Boulevard", "Elm Court",
                                 "Riverside Drive", "Oak Lane", "Sunset Way", "Park Place", "Mill Street"};
constexpr std::array kCities = {"Portland, OR",  "Austin, TX",  "Columbus, OH", "Raleigh, NC", "Denver, CO",
                                "Madison, WI",   "Tucson, AZ",  "Richmond, VA", "Boise, ID",   "Albany, NY"};
constexpr std::array kTimezones = {"America/New_York", "America/Chicago", "America/Denver", "America/Los_Angeles"};
constexpr std::array kColors = {"black", "blue", "brown", "gold", "gray", "green", "silver", "white"};
constexpr std::array kRelations = {"spouse", "daughter", "son", "mother", "father", "sister", "brother"};
constexpr std::array kDomains = {"mailbox.example", "inbox.example", "post.example", "webmail.example"};
constexpr std::array kLinkHosts = {"https://portal.example.com", "https://tickets.example.org",
                                   "https://docs.example.net", "https://pay.example.com", "https://maps.example.com"};

struct Activity {
    const char* title;
    const char* description;
    const char* frequency;
};

constexpr std::array<Activity, 60> kActivities = {{
    {"Morning commute", "Travel to work by bus or car and check messages on the way.", "daily"},
    {"Grocery shopping", "Buy groceries for the week at the neighborhood supermarket, using a shopping list.", "weekly"},
    {"Pay electricity bill", "Review the monthly electricity statement and pay it through the utility website.", "monthly"},
    {"Dentist checkup", "Routine dental cleaning and examination at the local clinic.", "seasonally"},
    {"Team standup meeting", "Short meeting with coworkers to share progress and blockers.", "daily"},
    {"Gym workout", "Strength and cardio session at the gym near home.", "weekly"},
    {"Book flights for a trip", "Compare airlines and book round-trip flights for an upcoming trip.", "once"},
    {"Annual physical exam", "Yearly visit to the primary care doctor, including blood work.", "yearly"},
    {"Family dinner", "Cook and share dinner with family members at home.", "weekly"},
    {"Renew car registration", "Renew the vehicle registration online before it expires.", "yearly"},
    {"Birthday party for a friend", "Plan and attend a birthday celebration for a close friend.", "yearly"},
    {"Online shopping order", "Order household items online and track the delivery.", "monthly"},
    {"Concert night", "Attend a live concert downtown with friends, tickets bought in advance.", "seasonally"},
    {"Quarterly performance review", "Meet with a manager to discuss goals and feedback.", "seasonally"},
    {"Volunteer at food bank", "Sort donations and pack food boxes at the community food bank.", "monthly"},
    {"Parent-teacher conference", "Meet a child's teacher to discuss school progress.", "seasonally"},
    {"Car maintenance", "Take the car in for an oil change and tire rotation.", "seasonally"},
    {"Weekend hike", "Day hike on a nearby trail, packing lunch and water.", "monthly"},
    {"Book club meeting", "Discuss this month's book with the reading group at a cafe.", "monthly"},
    {"Pay rent", "Transfer the monthly rent to the landlord and keep the receipt.", "monthly"},
    {"Conference attendance", "Attend a professional conference, including registration and hotel booking.", "yearly"},
    {"Haircut appointment", "Scheduled haircut at the usual salon.", "monthly"},
    {"Movie night", "Watch a new release at the cinema with a friend.", "monthly"},
    {"Tax filing", "Gather documents and file the annual income tax return.", "yearly"},
    {"Weekly video call with parents", "Catch up with parents over a video call.", "weekly"},
    {"Cooking class", "Take an evening cooking class to learn a new cuisine.", "once"},
    {"Project deadline", "Finish and submit deliverables for a work project before the deadline.", "once"},
    {"Veterinarian visit", "Bring the pet to the vet for vaccinations.", "yearly"},
    {"Home internet outage", "Report an internet outage to the provider and schedule a technician.", "once"},
    {"Holiday travel", "Travel to visit relatives over the holidays.", "yearly"},
    {"Coffee with a mentor", "Meet a mentor for coffee to talk about career plans.", "monthly"},
    {"Library book return", "Return borrowed books and pick up reserved ones.", "monthly"},
    {"Yoga class", "Attend an evening yoga class at the studio.", "weekly"},
    {"Insurance renewal", "Review and renew the home or renter's insurance policy.", "yearly"},
    {"Apartment maintenance request", "Submit a repair request for a leaking faucet.", "once"},
    {"Kids' soccer practice", "Drive the kids to soccer practice and cheer from the sidelines.", "weekly"},
    {"Farmers market visit", "Buy fresh produce at the Saturday farmers market.", "weekly"},
    {"Job training workshop", "Attend a workshop to learn a new professional skill.", "once"},
    {"Anniversary dinner", "Reserve a table at a favorite restaurant to celebrate an anniversary.", "yearly"},
    {"Museum visit", "Visit a new exhibit at the city museum.", "seasonally"},
    {"Moving to a new apartment", "Pack, hire movers, and update addresses after moving.", "once"},
    {"Credit card payment", "Pay the credit card balance and review recent charges.", "monthly"},
    {"Neighborhood cleanup", "Join neighbors to clean up the local park.", "seasonally"},
    {"Wedding of a relative", "Attend a relative's wedding, including travel and gift shopping.", "once"},
    {"Online course session", "Follow a weekly session of an online course and submit homework.", "weekly"},
    {"Prescription refill", "Refill a prescription at the pharmacy.", "monthly"},
    {"Team offsite", "Full-day offsite with coworkers for planning and team building.", "yearly"},
    {"Streaming subscription renewal", "Renewal notice and payment for a streaming service.", "monthly"},
    {"Garden work", "Plant seasonal flowers and weed the garden beds.", "seasonally"},
    {"Lunch with coworkers", "Try a new lunch place with coworkers.", "weekly"},
    {"School enrollment", "Complete enrollment forms for a child's next school year.", "yearly"},
    {"Bike repair", "Drop the bicycle at the repair shop for a tune-up.", "once"},
    {"Charity run", "Register for and run a charity 5K race.", "yearly"},
    {"Job interview", "Prepare for and attend an interview for a new role.", "once"},
    {"Weekly meal prep", "Cook and portion meals for the work week.", "weekly"},
    {"Theater show", "See a play at the local theater, tickets purchased online.", "once"},
    {"Phone plan upgrade", "Compare phone plans and upgrade the mobile contract.", "once"},
    {"Laundry and chores", "Do laundry and clean the apartment.", "weekly"},
    {"Community meeting", "Attend a town hall meeting about local issues.", "monthly"},
    {"Evening language lesson", "Practice a foreign language with a tutor online.", "weekly"},
}};

struct SubEvent {
    const char* prefix;
    const char* description;
};

constexpr std::array<SubEvent, 8> kSubEvents = {{
    {"Receive confirmation for", "A confirmation message arrives with the reference number and details."},
    {"Add to calendar:", "Block the time in the calendar and invite anyone involved."},
    {"Set reminder for", "Set a reminder so nothing is forgotten beforehand."},
    {"Message about", "Exchange a few text messages to coordinate the details."},
    {"Pay for", "Complete the payment and keep the receipt."},
    {"Get ticket for", "Receive the ticket or pass needed for entry."},
    {"Follow up after", "Send a short follow-up note with next steps."},
    {"Prepare for", "Gather what is needed and plan the logistics."},
}};

constexpr std::array kGreetings = {"Hi {name},", "Hello {name},", "Dear {name},", "Hey {name},", "Good morning {name},"};
constexpr std::array kOpeners = {
    "I wanted to reach out about {title}.",
    "Quick note regarding {title}.",
    "Following up on {title}, here are the details.",
    "This is a confirmation for {title}.",
    "I hope your week is going well. I'm writing about {title}.",
    "Thanks again for your help with {title}.",
};
constexpr std::array kClosers = {
    "Let me know if anything changes.",
    "Please reply if you have any questions.",
    "Looking forward to it.",
    "Thanks so much, and talk soon.",
    "Feel free to call me if that is easier.",
    "I'll keep you posted on any updates.",
};
constexpr std::array kSignoffs = {"Best,", "Thanks,", "Cheers,", "Warm regards,", "Sincerely,"};
constexpr std::array kSubjectForms = {"{title}", "Re: {title}", "Update: {title}", "Question about {title}",
                                      "Confirmation: {title}", "Details for {title}"};
constexpr std::array kChatLines = {
    "Are we still on for {title}?",
    "Yes! What time works for you?",
    "How about {time}?",
    "Perfect, see you then.",
    "Can you bring the details?",
    "Running a bit late, sorry!",
    "No worries, I'll wait.",
    "Just confirmed everything for {title}.",
};

std::string fill(std::string_view tmpl, const std::vector<std::pair<std::string, std::string>>& values) {
    return prompts::render(tmpl, values);
}

std::string slug_of(std::string_view name) {
    std::string out;
    for (unsigned char c : name) {
        if (std::isalnum(c)) {
            out += static_cast<char>(std::tolower(c));
        } else if ((c == ' ' || c == '-' || c == '.') && !out.empty() && out.back() != '.') {
            out += '.';
        }
    }
    while (!out.empty() && out.back() == '.') out.pop_back();
    return out.empty() ? std::string("contact") : out;
}

std::string pretty_time(const LocalDateTime& t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d at %02d:%02d", t.year, t.month, t.day, t.hour, t.minute);
    return buf;
}

LocalDateTime base_time() { return LocalDateTime{2024, 1, 1, 0, 0, 0, 0}; }

// Per-call context: the prompt, a PRNG keyed on (prompt hash, seed), and the
// JSON values the prompt embeds.
class Call {
public:
    Call(const GenerationRequest& request, std::uint64_t seed)
        : request_(request),
          rng_(derive_seed(seed, fnv1a64(request.user_prompt, fnv1a64(request.system_prompt)))),
          values_(json_top_level(request.user_prompt)) {}

    Rng& rng() { return rng_; }
    const std::string& prompt() const { return request_.user_prompt; }
    const GenerationRequest& request() const { return request_; }

    template <typename T, std::size_t N>
    std::string pick(const std::array<T, N>& items) {
        return std::string(items[rng_.index(N)]);
    }

    Json profile() const {
        for (const auto& v : values_) {
            if (v.is_object() && v.contains("friends")) return v;
        }
        return Json::object();
    }

    // The last embedded object that looks like an event, searching only the
    // prompt text after `marker` when it occurs.
    Json event(std::string_view marker = {}) const {
        std::string_view scope = prompt();
        if (!marker.empty()) {
            const auto pos = scope.rfind(marker);
            if (pos != std::string_view::npos) scope = scope.substr(pos);
        }
        const auto values = json_top_level(scope);
        for (auto it = values.rbegin(); it != values.rend(); ++it) {
            if (it->is_object() && it->contains("event")) return *it;
        }
        return Json::object();
    }

    Json last_object_between(std::string_view begin, std::string_view end) const {
        std::string_view scope = prompt();
        const auto b = scope.rfind(begin);
        if (b != std::string_view::npos) scope = scope.substr(b);
        const auto e = scope.rfind(end);
        if (e != std::string_view::npos && !end.empty()) scope = scope.substr(0, e);
        const auto values = json_top_level(scope);
        for (auto it = values.rbegin(); it != values.rend(); ++it) {
            if (it->is_object()) return *it;
        }
        return Json::object();
    }

    // (name, email, direction) from the "Perspective:" line.
    struct Perspective {
        std::string name = "Alex Morgan";
        std::string email = "alex.morgan@mailbox.example";
        Direction direction = Direction::kReceived;
    };
    Perspective perspective() const {
        static const std::regex re(R"(Perspective: (.+) <([^>]*)> (sent|received) this)");
        Perspective p;
        std::smatch m;
        if (std::regex_search(prompt(), m, re)) {
            p.name = m[1].str();
            if (!m[2].str().empty()) p.email = m[2].str();
            p.direction = m[3].str() == "sent" ? Direction::kSent : Direction::kReceived;
        }
        return p;
    }

private:
    const GenerationRequest& request_;
    Rng rng_;
    std::vector<Json> values_;
};

LocalDateTime time_field(const Json& obj, const char* key, LocalDateTime fallback) {
    if (obj.contains(key) && obj[key].is_string()) {
        if (auto t = LocalDateTime::parse(obj[key].get<std::string>())) return *t;
    }
    return fallback;
}

std::vector<std::string> participants_of(const Json& event) {
    std::vector<std::string> out;
    if (!event.contains("other_participants")) return out;
    const auto& p = event["other_participants"];
    if (p.is_array()) {
        for (const auto& x : p) {
            if (x.is_string() && !text::trim(x.get<std::string>()).empty()) out.push_back(x.get<std::string>());
        }
    } else if (p.is_string() && !text::trim(p.get<std::string>()).empty()) {
        out.push_back(p.get<std::string>());
    }
    return out;
}

std::vector<std::string> social_graph_of(const Json& profile) {
    std::vector<std::string> out;
    if (profile.contains("family_members") && profile["family_members"].is_array()) {
        for (const auto& m : profile["family_members"]) out.push_back(json_string(m, "name"));
    }
    for (const char* key : {"friends", "coworkers", "classmates"}) {
        for (auto& n : json_string_list(profile, key)) out.push_back(std::move(n));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const std::string& s) { return s.empty(); }), out.end());
    return out;
}

std::string full_name(Call& c) { return c.pick(kGivenNames) + " " + c.pick(kSurnames); }

std::string address(Call& c) {
    return std::to_string(10 + c.rng().index(9000)) + " " + c.pick(kStreets) + ", " + c.pick(kCities);
}

// Lowest integer in an age bracket like "25-34" or "65+".
int age_floor(std::string_view age) {
    int v = 0;
    bool any = false;
    for (char ch : age) {
        if (ch >= '0' && ch <= '9') {
            v = v * 10 + (ch - '0');
            any = true;
        } else if (any) {
            break;
        }
    }
    return any ? v : 35;
}

Json mock_profile(Call& c) {
    Json draw = Json::object();
    for (const auto& v : json_top_level(c.prompt())) {
        if (v.is_object() && !v.contains("friends")) {
            draw = v;
            break;
        }
    }
    const auto given = c.pick(kGivenNames);
    const auto surname = c.pick(kSurnames);
    const auto occupation = c.pick(kOccupations);
    const auto age = json_string(draw, "age", std::to_string(25 + c.rng().index(40)));
    const bool student = age_floor(age) < 25 || occupation.find("student") != std::string::npos;

    Json p;
    p["name"] = given + " " + surname;
    p["surname"] = surname;
    p["given_name"] = given;
    p["nicknames"] = Json::array({given.substr(0, std::min<std::size_t>(3, given.size()))});
    p["locale"] = json_string(draw, "locale", "en-US");
    p["timezone"] = json_string(draw, "timezone", c.pick(kTimezones));
    p["age"] = age;
    p["gender"] = json_string(draw, "gender", "female");
    p["income"] = json_string(draw, "income", "$50,000-$74,999");
    p["ethnicity"] = json_string(draw, "ethnicity", "White");
    p["family_setup"] = json_string(draw, "family_setup", "lives with partner");
    p["nationality"] = json_string(draw, "nationality", "United States");
    p["email"] = slug_of(given) + "." + slug_of(surname) + std::to_string(c.rng().index(90) + 10) + "@" +
                 c.pick(kDomains);
    p["phone"] = "(" + std::to_string(200 + c.rng().index(700)) + ") 555-" + std::to_string(1000 + c.rng().index(9000));
    p["eye_color"] = c.pick(kColors);
    p["hair_color"] = c.pick(kColors);
    p["height"] = std::to_string(150 + c.rng().index(45)) + " cm";
    p["weight"] = std::to_string(50 + c.rng().index(50)) + " kg";
    p["occupation"] = occupation;
    p["weekdays_routines"] = "Wakes up around " + std::to_string(5 + c.rng().index(4)) +
                             " am, works as a " + occupation + ", and spends evenings cooking and reading.";
    p["weekend_routines"] = "Runs errands on Saturday morning, meets friends in the afternoon, and rests on Sunday.";
    p["life_events_for_holidays_and_vacations"] =
        "Visits family for the winter holidays and takes one short trip each summer.";
    Json family = Json::array();
    const auto family_size = 1 + c.rng().index(3);
    for (std::size_t i = 0; i < family_size; ++i) {
        const std::string relation = c.pick(kRelations);
        // Rough age band per relation: [lo, lo + span).
        const auto [lo, span] = relation == "spouse"                          ? std::pair{22, 45}
                                : relation == "daughter" || relation == "son" ? std::pair{3, 28}
                                : relation == "mother" || relation == "father" ? std::pair{45, 45}
                                                                               : std::pair{15, 55};
        family.push_back(Json{{"name", c.pick(kGivenNames) + " " + surname},
                              {"age", std::to_string(lo + static_cast<int>(c.rng().index(span)))},
                              {"relation", relation},
                              {"occupation", c.pick(kOccupations)},
                              {"address", address(c)}});
    }
    p["family_members"] = family;
    auto names = [&](std::size_t n) {
        Json out = Json::array();
        while (out.size() < n) {
            auto name = full_name(c);
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        }
        return out;
    };
    p["friends"] = names(5);
    p["coworkers"] = names(8);
    if (student) p["classmates"] = names(10);
    p["home_address"] = address(c);
    p["office_address"] = address(c);
    if (student) p["school_address"] = address(c);
    return p;
}

std::string normalized(std::string_view s) { return text::join(text::word_tokens(s), " "); }

Json mock_seed_events(const GenerationRequest& request, std::uint64_t seed) {
    static const std::regex count_re(R"(at least (\d+) events)");
    std::smatch m;
    std::size_t count = 10;
    if (std::regex_search(request.user_prompt, m, count_re)) count = std::stoul(m[1].str());

    // Keyed on the normalized persona text only, so descriptions that differ
    // in case or punctuation produce the same list.
    std::string persona = request.user_prompt;
    const auto begin = persona.rfind("\nInput\n");
    const auto end = persona.rfind("\nOutput\n");
    if (begin != std::string::npos && end != std::string::npos && end > begin) {
        persona = persona.substr(begin + 7, end - begin - 7);
    }
    const auto persona_norm = normalized(persona);
    Rng rng(derive_seed(seed, fnv1a64(persona_norm)));
    const auto tokens = text::word_tokens(persona);
    std::vector<std::string> topics;
    for (const auto& t : tokens) {
        if (text::codepoint_count(t) >= 6 && std::find(topics.begin(), topics.end(), t) == topics.end()) {
            topics.push_back(t);
        }
    }

    const bool bad_frequency = persona_norm.find("biweekly") != std::string::npos;
    Json out = Json::array();
    auto order = rng.sample_without_replacement(kActivities.size(), std::min(count, kActivities.size()));
    while (order.size() < count) order.push_back(rng.index(kActivities.size()));
    for (std::size_t i = 0; i < count; ++i) {
        const auto& a = kActivities[order[i]];
        std::string description = a.description;
        if (!topics.empty()) description += " Related to " + topics[rng.index(topics.size())] + ".";
        out.push_back(Json{{"event", a.title},
                           {"detailed_description", description},
                           {"frequency", bad_frequency && i == 0 ? "biweekly" : a.frequency}});
    }
    return out;
}

std::string strip_sub_prefix(std::string title) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& s : kSubEvents) {
            const std::string prefix = std::string(s.prefix) + " ";
            if (title.rfind(prefix, 0) == 0) {
                title = title.substr(prefix.size());
                changed = true;
            }
        }
    }
    return title;
}

Json expanded(const std::string& title, const std::string& description, const std::string& frequency,
              const std::string& location, const std::vector<std::string>& participants, LocalDateTime start,
              std::int64_t minutes) {
    return Json{{"event", title},
                {"detailed_description", description},
                {"frequency", frequency},
                {"location", location},
                {"other_participants", participants},
                {"start_time", start.to_string()},
                {"end_time", start.plus_minutes(minutes).to_string()}};
}

Json mock_align(Call& c) {
    const auto profile = c.profile();
    const auto seed_event = c.event("Seed event:");
    const auto graph = social_graph_of(profile);
    std::vector<std::string> participants;
    const auto n = graph.empty() ? 0 : c.rng().index(3);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& name = graph[c.rng().index(graph.size())];
        if (std::find(participants.begin(), participants.end(), name) == participants.end()) participants.push_back(name);
    }
    std::string location;
    switch (c.rng().index(3)) {
        case 0: location = json_string(profile, "home_address"); break;
        case 1: location = json_string(profile, "office_address"); break;
        default: break;
    }
    const auto start = base_time().plus_minutes(static_cast<std::int64_t>(c.rng().index(366)) * 1440 +
                                                static_cast<std::int64_t>(7 + c.rng().index(13)) * 60 +
                                                static_cast<std::int64_t>(c.rng().index(4)) * 15);
    std::string description = json_string(seed_event, "detailed_description");
    const auto occupation = json_string(profile, "occupation");
    if (!occupation.empty()) {
        description += (description.empty() ? "" : " ") + json_string(profile, "given_name", "They") +
                       " fits this around work as a " + occupation + ".";
    }
    auto frequency = json_string(seed_event, "frequency", "once");
    if (!parse_frequency(frequency)) frequency = "once";
    return expanded(json_string(seed_event, "event", "Errand"), description, frequency, location, participants, start,
                    30 + static_cast<std::int64_t>(c.rng().index(6)) * 30);
}

Json mock_expand(Call& c, const MockOptions& options) {
    const auto parent = c.event("Your Turn");
    std::size_t n = 0;
    switch (options.expansion) {
        case ExpansionPolicy::kNever: n = 0; break;
        case ExpansionPolicy::kAlways: n = options.always_children; break;
        case ExpansionPolicy::kMixed: n = c.rng().chance(options.expand_probability) ? 1 + c.rng().index(3) : 0; break;
    }
    Json out = Json::array();
    const auto core = strip_sub_prefix(json_string(parent, "event", "Errand"));
    const auto start = time_field(parent, "start_time", base_time());
    const auto participants = participants_of(parent);
    const auto picks = c.rng().sample_without_replacement(kSubEvents.size(), std::min(n, kSubEvents.size()));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& sub = kSubEvents[picks[i % picks.size()]];
        std::vector<std::string> people;
        if (!participants.empty() && c.rng().chance(0.5)) people.push_back(participants[c.rng().index(participants.size())]);
        const auto offset = static_cast<std::int64_t>(c.rng().index(4320)) - 2880;
        out.push_back(expanded(std::string(sub.prefix) + " " + core, sub.description, "once",
                               json_string(parent, "location"), people, start.plus_minutes(offset),
                               10 + static_cast<std::int64_t>(c.rng().index(9)) * 10));
    }
    return out;
}

Json mock_reflect(Call& c, const MockOptions& options) {
    bool revise = false;
    switch (options.reflection) {
        case ReflectionPolicy::kApprove: revise = false; break;
        case ReflectionPolicy::kRevise: revise = true; break;
        case ReflectionPolicy::kMixed: revise = c.rng().chance(0.2); break;
    }
    if (!revise) return Json{{"verdict", "approve"}};
    auto event = c.event("Event:");
    event["detailed_description"] =
        json_string(event, "detailed_description") + " Details are confirmed in writing beforehand.";
    return Json{{"verdict", "revise"}, {"event", event}};
}

}  // namespace

PassKind route_pass_kind(std::string_view event_text) {
    if (text::contains_icase(event_text, "boarding") || text::contains_icase(event_text, "flight")) {
        return PassKind::kBoardingPass;
    }
    if (text::contains_icase(event_text, "membership") || text::contains_icase(event_text, "gym")) {
        return PassKind::kMembership;
    }
    if (text::contains_icase(event_text, "coupon") || text::contains_icase(event_text, "discount")) {
        return PassKind::kCoupon;
    }
    return PassKind::kTicket;
}

std::pair<ArtifactKind, Direction> route_artifact_kind(std::string_view event_text, std::uint64_t salt) {
    auto has = [&](std::initializer_list<std::string_view> words) {
        return std::any_of(words.begin(), words.end(), [&](std::string_view w) { return text::contains_icase(event_text, w); });
    };
    ArtifactKind kind;
    if (has({"boarding pass", "ticket", "membership card", "coupon"})) {
        kind = ArtifactKind::kWalletPass;
    } else if (has({"add to calendar", "meeting", "appointment", "conference", "class", "checkup", "interview"})) {
        kind = ArtifactKind::kCalendarEntry;
    } else if (has({"reminder", "deadline", "renew", "refill"})) {
        kind = ArtifactKind::kReminder;
    } else if (has({"message about", "text", "chat", "coordinate"})) {
        kind = ArtifactKind::kMessageThread;
    } else {
        // Email-heavy mix for everything else.
        constexpr ArtifactKind kMix[] = {ArtifactKind::kEmail, ArtifactKind::kEmail, ArtifactKind::kEmail,
                                         ArtifactKind::kEmail, ArtifactKind::kMessageThread, ArtifactKind::kCalendarEntry};
        kind = kMix[splitmix64(salt) % std::size(kMix)];
    }
    Direction direction;
    if (has({"receive", "confirmation", "notice", "statement"})) {
        direction = Direction::kReceived;
    } else if (has({"follow up", "invite", "book ", "message about", "send"})) {
        direction = Direction::kSent;
    } else {
        direction = (splitmix64(salt ^ 0x5bd1e995ULL) & 1) ? Direction::kSent : Direction::kReceived;
    }
    return {kind, direction};
}

namespace {

struct Scene {
    Call::Perspective me;
    std::string title;
    std::string description;
    std::string location;
    LocalDateTime start;
    LocalDateTime end;
    std::string counterpart;
    std::string counterpart_email;
};

Scene scene_of(Call& c) {
    Scene s;
    s.me = c.perspective();
    const auto event = c.event("Additional References:");
    s.title = json_string(event, "event", "Plans");
    s.description = json_string(event, "detailed_description");
    s.location = json_string(event, "location");
    s.start = time_field(event, "start_time", base_time());
    s.end = time_field(event, "end_time", s.start);
    if (s.end < s.start) s.end = s.start;
    const auto people = participants_of(event);
    s.counterpart = people.empty() ? full_name(c) : people.front();
    if (s.counterpart == s.me.name) s.counterpart = full_name(c);
    s.counterpart_email = slug_of(s.counterpart) + "@" + c.pick(kDomains);
    return s;
}

std::string first_name(const std::string& name) {
    const auto space = name.find(' ');
    return space == std::string::npos ? name : name.substr(0, space);
}

Json mock_email(Call& c) {
    const auto s = scene_of(c);
    const bool sent = s.me.direction == Direction::kSent;
    const auto& sender = sent ? s.me.name : s.counterpart;
    const auto& recipient = sent ? s.counterpart : s.me.name;
    const auto lead = static_cast<std::int64_t>(c.rng().index(72 * 60));
    const std::vector<std::pair<std::string, std::string>> values = {
        {"name", first_name(recipient)}, {"title", text::to_lower_ascii(s.title)}};

    std::string body = fill(c.pick(kGreetings), values) + "\n\n" + fill(c.pick(kOpeners), values);
    if (!s.description.empty()) body += " " + s.description;
    body += "\n\nIt is planned for " + pretty_time(s.start);
    if (!s.location.empty()) body += " at " + s.location;
    body += ".";
    if (c.rng().chance(0.5)) {
        body += " It should take until about " + pretty_time(s.end).substr(14) + ".";
    }
    if (c.rng().chance(0.3)) {
        body += "\n\nMore information is here: " + c.pick(kLinkHosts) + "/" + slug_of(s.title);
    }
    body += "\n\n" + fill(c.pick(kClosers), values) + "\n\n" + c.pick(kSignoffs) + "\n" + first_name(sender);

    return Json{{"sender_name", sender},
                {"from_address", sent ? s.me.email : s.counterpart_email},
                {"to_address", sent ? s.counterpart_email : s.me.email},
                {"send_time", s.start.plus_minutes(-lead - 30).to_string()},
                {"subject", fill(c.pick(kSubjectForms), {{"title", s.title}})},
                {"body", body}};
}

Json mock_thread(Call& c) {
    const auto s = scene_of(c);
    const bool sent = s.me.direction == Direction::kSent;
    const std::vector<std::string> order = sent ? std::vector{s.me.name, s.counterpart}
                                                : std::vector{s.counterpart, s.me.name};
    auto t = s.start.plus_minutes(-static_cast<std::int64_t>(60 + c.rng().index(24 * 60)));
    const std::vector<std::pair<std::string, std::string>> values = {
        {"title", text::to_lower_ascii(s.title)}, {"time", pretty_time(s.start).substr(14)}};
    Json messages = Json::array();
    const auto n = 3 + c.rng().index(3);
    for (std::size_t i = 0; i < n; ++i) {
        messages.push_back(Json{{"sender", order[i % 2]}, {"send_time", t.to_string()},
                                {"text", fill(i == 0 ? kChatLines[0] : c.pick(kChatLines), values)}});
        t = t.plus_minutes(1 + static_cast<std::int64_t>(c.rng().index(30)));
    }
    return Json{{"participants", order}, {"messages", messages}};
}

Json mock_calendar(Call& c) {
    const auto s = scene_of(c);
    std::vector<std::string> attendees{s.me.name};
    if (s.counterpart != s.me.name) attendees.push_back(s.counterpart);
    return Json{{"title", s.title},
                {"start_time", s.start.to_string()},
                {"end_time", s.end.to_string()},
                {"location", s.location},
                {"attendees", attendees}};
}

Json mock_reminder(Call& c) {
    const auto s = scene_of(c);
    Json j{{"title", s.title}, {"due_time", s.start.plus_minutes(-60).to_string()}};
    if (!s.description.empty()) j["note"] = s.description;
    return j;
}

Json mock_wallet(Call& c) {
    const auto s = scene_of(c);
    std::string code;
    for (int i = 0; i < 6; ++i) code += "ABCDEFGHJKLMNPQRSTUVWXYZ23456789"[c.rng().index(32)];
    return Json{{"pass_kind", to_string(route_pass_kind(s.title + " " + s.description))},
                {"title", s.title},
                {"reference_code", code},
                {"valid_from", s.start.plus_minutes(-120).to_string()},
                {"valid_until", s.end.to_string()}};
}

// Field a mixed critic asks to fix, per artifact kind. Threads are left alone.
std::optional<std::string> revisable_field(const Json& artifact) {
    if (artifact.contains("body")) return "body";
    if (artifact.contains("title")) return "title";
    return std::nullopt;
}

constexpr std::string_view kRevisionMark = "(revised)";

Json mock_critique(Call& c, const MockOptions& options) {
    const auto& role = c.request().agent_role;
    const auto colon = role.find(':');
    const auto axis_name = colon == std::string::npos ? std::string() : role.substr(colon + 1);
    const bool forced = std::any_of(options.revising_critics.begin(), options.revising_critics.end(),
                                    [&](CriticAxis a) { return to_string(a) == axis_name; });
    if (forced) {
        return Json{{"verdict", "revise"},
                    {"feedback", "The " + axis_name + " of this artifact needs work; fix body and tighten details."}};
    }
    if (options.critics == CriticPolicy::kMixed && axis_name == to_string(CriticAxis::kRealismFluency)) {
        const auto artifact = c.last_object_between("for review:", "");
        const auto field = revisable_field(artifact);
        if (field && artifact.dump().find(kRevisionMark) == std::string::npos && c.rng().chance(0.3)) {
            return Json{{"verdict", "revise"}, {"feedback", "Reads a little flat; fix " + *field + " with one concrete detail."}};
        }
    }
    return Json{{"verdict", "approve"}, {"feedback", "No issues found."}};
}

Json mock_revise(Call& c) {
    auto artifact = c.last_object_between("\nOriginal ", "\nSuggestions:");
    const auto pos = c.prompt().rfind("\nSuggestions:");
    const std::string suggestions = pos == std::string::npos ? "" : c.prompt().substr(pos);
    for (auto it = artifact.begin(); it != artifact.end(); ++it) {
        if (!it.value().is_string()) continue;
        if (!text::contains_icase(suggestions, "fix " + it.key())) continue;
        auto value = it.value().get<std::string>();
        if (it.key() == "body" || it.key() == "note") {
            value += "\n\nP.S. I double-checked the time and place. " + std::string(kRevisionMark);
        } else {
            value += " " + std::string(kRevisionMark);
        }
        it.value() = value;
    }
    return artifact;
}

Json mock_choice(Call& c, const MockOptions& options) {
    std::pair<ArtifactKind, Direction> choice;
    if (options.fixed_kind) {
        choice = *options.fixed_kind;
    } else {
        const auto event = c.event("Event:");
        choice = route_artifact_kind(json_string(event, "event") + " " + json_string(event, "detailed_description"),
                                     c.rng().next_u64());
    }
    return Json{{"kind", to_string(choice.first)}, {"direction", to_string(choice.second)}};
}

std::string mock_outline(Call& c) {
    const auto event = c.event("Event Details (JSON):");
    const auto title = json_string(event, "event", "the event");
    std::string out = "1. Purpose: " + title + "\n";
    out += "   - " + json_string(event, "detailed_description", "Share the plan.") + "\n";
    out += "2. Logistics\n   - When: " + json_string(event, "start_time") + "\n";
    const auto location = json_string(event, "location");
    if (!location.empty()) out += "   - Where: " + location + "\n";
    out += "3. Next steps\n   - " + c.pick(kClosers) + "\n";
    return out;
}

Json mock_judge(Call& c, const MockOptions& options) {
    Json out = Json::object();
    double sum = 0;
    for (const char* axis : {"Tone", "Fluency", "Coherence", "Informativeness", "Engagement"}) {
        const int score = options.judge_score != 0 ? options.judge_score : 3 + static_cast<int>(c.rng().index(3));
        sum += score;
        out[axis] = Json{{"score", score}, {"explanation", std::string(axis) + " is acceptable for the context."}};
    }
    out["Overall"] = Json{{"score", sum / 5.0}, {"summary", "Reasonable synthetic email."}};
    return out;
}

std::string wrap(const Json& j, Rng& rng) {
    // Vary the framing so extraction is exercised on prose and code fences.
    switch (rng.index(3)) {
        case 0: return j.dump(2);
        case 1: return "```json\n" + j.dump(2) + "\n```";
        default: return "Here is the result.\n" + j.dump() + "\nLet me know if you need changes.";
    }
}

template <typename E>
E parse_enum(const Json& j, const char* key, std::initializer_list<std::pair<const char*, E>> table, E fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_string()) throw Error(ErrorCode::kConfigError, std::string("mock.") + key + " must be a string");
    const auto value = j[key].get<std::string>();
    for (const auto& [name, e] : table) {
        if (value == name) return e;
    }
    throw Error(ErrorCode::kConfigError, std::string("mock.") + key + ": unknown value \"" + value + "\"");
}

}  // namespace

MockOptions MockOptions::from_json(const Json& j) {
    static const std::vector<std::string> kKeys = {"seed",        "embedding_dim",     "expansion",
                                                   "always_children", "expand_probability", "reflection",
                                                   "critics",     "revising_critics",  "fixed_kind",
                                                   "fixed_direction", "judge_score",   "fixed_input_tokens",
                                                   "fixed_output_tokens"};
    if (!j.is_object()) throw Error(ErrorCode::kConfigError, "mock options must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(kKeys.begin(), kKeys.end(), it.key()) == kKeys.end()) {
            throw Error(ErrorCode::kConfigError, "unknown mock option \"" + it.key() + "\"");
        }
    }
    MockOptions o;
    try {
        o.seed = j.value("seed", o.seed);
        o.embedding_dim = j.value("embedding_dim", o.embedding_dim);
        o.always_children = j.value("always_children", o.always_children);
        o.expand_probability = j.value("expand_probability", o.expand_probability);
        o.judge_score = j.value("judge_score", o.judge_score);
        if (j.contains("fixed_input_tokens")) o.fixed_input_tokens = j["fixed_input_tokens"].get<std::uint64_t>();
        if (j.contains("fixed_output_tokens")) o.fixed_output_tokens = j["fixed_output_tokens"].get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kConfigError, std::string("mock options: ") + e.what());
    }
    o.expansion = parse_enum<ExpansionPolicy>(
        j, "expansion", {{"mixed", ExpansionPolicy::kMixed}, {"always", ExpansionPolicy::kAlways}, {"never", ExpansionPolicy::kNever}},
        o.expansion);
    o.reflection = parse_enum<ReflectionPolicy>(
        j, "reflection",
        {{"mixed", ReflectionPolicy::kMixed}, {"approve", ReflectionPolicy::kApprove}, {"revise", ReflectionPolicy::kRevise}},
        o.reflection);
    o.critics = parse_enum<CriticPolicy>(j, "critics", {{"mixed", CriticPolicy::kMixed}, {"approve", CriticPolicy::kApprove}},
                                         o.critics);
    if (j.contains("revising_critics")) {
        for (const auto& a : j["revising_critics"]) {
            bool found = false;
            for (auto axis : kAllCriticAxes) {
                if (a.is_string() && a.get<std::string>() == to_string(axis)) {
                    o.revising_critics.insert(axis);
                    found = true;
                }
            }
            if (!found) throw Error(ErrorCode::kConfigError, "mock.revising_critics: unknown axis " + a.dump());
        }
    }
    if (j.contains("fixed_kind")) {
        const auto kind = parse_artifact_kind(json_string(j, "fixed_kind"));
        const auto direction = parse_direction(json_string(j, "fixed_direction", "received"));
        if (!kind || !direction) throw Error(ErrorCode::kConfigError, "mock.fixed_kind/fixed_direction invalid");
        o.fixed_kind = std::make_pair(*kind, *direction);
    }
    if (o.fixed_input_tokens.has_value() != o.fixed_output_tokens.has_value()) {
        throw Error(ErrorCode::kConfigError, "mock.fixed_input_tokens and fixed_output_tokens go together");
    }
    if (o.embedding_dim < 2) throw Error(ErrorCode::kConfigError, "mock.embedding_dim must be >= 2");
    if (!(o.expand_probability >= 0.0 && o.expand_probability <= 1.0)) {
        throw Error(ErrorCode::kConfigError, "mock.expand_probability must be in [0, 1]");
    }
    if (o.judge_score < 0 || o.judge_score > 5) throw Error(ErrorCode::kConfigError, "mock.judge_score must be in 0..5");
    return o;
}

MockProvider::MockProvider(MockOptions options) : options_(std::move(options)) {}

std::string MockProvider::id() const { return "mock-v1/seed-" + std::to_string(options_.seed); }

std::string MockProvider::respond(const GenerationRequest& request) const {
    Call c(request, options_.seed);
    if (!request.schema_hint) {
        if (request.agent_role == prompts::role::kOutline) return mock_outline(c);
        return "pong " + std::to_string(c.rng().next_u64() % 1000000);
    }
    Json out;
    switch (*request.schema_hint) {
        case SchemaId::kProfile: out = mock_profile(c); break;
        case SchemaId::kSeedEvent: out = mock_seed_events(request, options_.seed).at(0); break;
        case SchemaId::kSeedEventList: out = mock_seed_events(request, options_.seed); break;
        case SchemaId::kExpandedEvent: out = mock_align(c); break;
        case SchemaId::kExpandedEventList: out = mock_expand(c, options_); break;
        case SchemaId::kReflection: out = mock_reflect(c, options_); break;
        case SchemaId::kArtifactChoice: out = mock_choice(c, options_); break;
        case SchemaId::kCritique: out = mock_critique(c, options_); break;
        case SchemaId::kJudge: out = mock_judge(c, options_); break;
        case SchemaId::kEmail:
        case SchemaId::kMessageThread:
        case SchemaId::kCalendarEntry:
        case SchemaId::kReminder:
        case SchemaId::kWalletPass:
            if (request.agent_role == prompts::role::kRevise) {
                out = mock_revise(c);
                break;
            }
            switch (*request.schema_hint) {
                case SchemaId::kEmail: out = mock_email(c); break;
                case SchemaId::kMessageThread: out = mock_thread(c); break;
                case SchemaId::kCalendarEntry: out = mock_calendar(c); break;
                case SchemaId::kReminder: out = mock_reminder(c); break;
                default: out = mock_wallet(c); break;
            }
            break;
    }
    return wrap(out, c.rng());
}

TokenEstimate MockProvider::estimate(const GenerationRequest& request) const {
    if (options_.fixed_input_tokens) return TokenEstimate{*options_.fixed_input_tokens, *options_.fixed_output_tokens};
    return Provider::estimate(request);
}

GenerationResponse MockProvider::generate(const GenerationRequest& request) {
    GenerationResponse r;
    r.text = respond(request);
    r.provider_id = id();
    if (options_.fixed_input_tokens) {
        r.input_tokens = *options_.fixed_input_tokens;
        r.output_tokens = *options_.fixed_output_tokens;
    } else {
        r.input_tokens = (request.system_prompt.size() + request.user_prompt.size() + 3) / 4;
        r.output_tokens = std::min<std::uint64_t>((r.text.size() + 3) / 4, request.max_output_tokens);
    }
    return r;
}

std::vector<double> MockProvider::embed(std::string_view input) {
    const auto dim = options_.embedding_dim;
    std::vector<double> v(dim, 0.0);
    const auto tokens = text::word_tokens(input);
    if (tokens.empty()) {
        v[0] = 1.0;  // sentinel for text without words
        return v;
    }
    const auto salt = splitmix64(options_.seed ^ 0x6a09e667f3bcc909ULL);
    for (const auto& t : tokens) {
        const auto h = splitmix64(fnv1a64(t) ^ salt);
        v[h % dim] += (h >> 63) ? -1.0 : 1.0;
    }
    auto normalize = [](std::vector<double>& x) {
        double norm = 0;
        for (double e : x) norm += e * e;
        norm = std::sqrt(norm);
        if (norm > 0) {
            for (double& e : x) e /= norm;
        }
        return norm > 0;
    };
    if (!normalize(v)) v[0] = 1.0;
    // A small whole-text component keeps texts with equal bags of words apart.
    Rng rng(derive_seed(options_.seed, fnv1a64(input)));
    std::vector<double> noise(dim);
    for (double& e : noise) e = rng.normal();
    normalize(noise);
    for (std::size_t i = 0; i < dim; ++i) v[i] += 0.15 * noise[i];
    normalize(v);
    return v;
}

}  // namespace tracegen
