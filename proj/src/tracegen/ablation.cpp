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

#include "tracegen/ablation.hpp"

#include <cctype>
#include <cstdio>
#include <string>

#include "tracegen/random.hpp"

namespace tracegen {
namespace {

constexpr std::array kClinics = {"Riverside Dental", "Oak Street Clinic", "Northside Eye Care", "Hillview Physio"};
constexpr std::array kBillers = {"City Power & Light", "Metro Water", "FiberNet Internet", "Summit Mobile"};
constexpr std::array kShops = {"ShopRight Online", "Parcelo", "HomeGoods Direct", "ByteMart"};
constexpr std::array kItems = {"a pair of running shoes", "a desk lamp", "a phone case", "a set of kitchen knives"};
constexpr std::array kVenues = {"Grand Theater", "Harbor Arena", "Blue Note Hall", "City Playhouse"};
constexpr std::array kShows = {"a comedy night", "a symphony concert", "a musical", "a jazz evening"};
constexpr std::array kTopics = {"quarterly planning", "project sync", "budget review", "team standup"};

std::string slugify(std::string_view s) {
    std::string out;
    for (const char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out.empty() ? "sender" : out;
}

std::string money(std::uint64_t cents) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "$%llu.%02llu", static_cast<unsigned long long>(cents / 100),
                  static_cast<unsigned long long>(cents % 100));
    return buf;
}

template <std::size_t N>
std::string pick(Rng& rng, const std::array<const char*, N>& pool) {
    return pool[rng.index(N)];
}

std::string first_or(const std::vector<std::string>& names, Rng& rng, std::string_view fallback) {
    return names.empty() ? std::string(fallback) : rng.pick(names);
}

}  // namespace

std::string_view to_string(TemplateKind k) {
    switch (k) {
        case TemplateKind::kAppointment: return "appointment";
        case TemplateKind::kBill: return "bill";
        case TemplateKind::kOnlineShopping: return "online_shopping";
        case TemplateKind::kTicketedShow: return "ticketed_show";
        case TemplateKind::kWorkMeeting: return "work_meeting";
    }
    return "appointment";
}

std::vector<Artifact> generate_ablated(const PersonaProfile& profile, std::size_t count, std::uint64_t seed) {
    std::vector<Artifact> out;
    out.reserve(count);
    Rng rng(derive_seed(seed, "ablation"));
    const std::string to = profile.email.empty() ? "recipient@example.com" : profile.email;
    const std::string name = profile.given_name.empty() ? profile.name : profile.given_name;
    const std::string office = profile.office_address.value_or(profile.home_address);
    for (std::size_t i = 0; i < count; ++i) {
        const auto kind = kAllTemplateKinds[i % kAllTemplateKinds.size()];
        // Slots shared by every template.
        LocalDateTime when{2024, static_cast<int>(rng.below(12)) + 1, static_cast<int>(rng.below(28)) + 1,
                           static_cast<int>(rng.below(10)) + 8, static_cast<int>(rng.below(4)) * 15, 0, 0};
        const auto send = when.plus_minutes(-static_cast<std::int64_t>(rng.below(4) + 1) * 1440);
        const auto amount = money(rng.below(20000) + 500);
        Email e;
        e.to_address = to;
        e.send_time = send;
        switch (kind) {
            case TemplateKind::kAppointment: {
                const std::string clinic = pick(rng, kClinics);
                e.sender_name = clinic;
                e.subject = "Appointment confirmation";
                e.body = "Dear " + name + ",\n\nThis is a confirmation of your appointment at " + clinic + " on " +
                         when.to_string() + ". Please arrive 10 minutes early.\n\nBest regards,\n" + clinic;
                break;
            }
            case TemplateKind::kBill: {
                const std::string biller = pick(rng, kBillers);
                e.sender_name = biller;
                e.subject = "Your bill is ready";
                e.body = "Dear " + name + ",\n\nYour bill of " + amount + " is due on " + when.to_string() +
                         ". Please pay before the due date.\n\nThank you,\n" + biller;
                break;
            }
            case TemplateKind::kOnlineShopping: {
                const std::string shop = pick(rng, kShops);
                const std::string item = pick(rng, kItems);
                e.sender_name = shop;
                e.subject = "Your order has been placed";
                e.body = "Dear " + name + ",\n\nThank you for your order of " + item + " for " + amount +
                         ". It will be delivered to " + profile.home_address + " by " + when.to_string() +
                         ".\n\nBest regards,\n" + shop;
                break;
            }
            case TemplateKind::kTicketedShow: {
                const std::string venue = pick(rng, kVenues);
                const std::string show = pick(rng, kShows);
                e.sender_name = venue;
                e.subject = "Your tickets";
                e.body = "Dear " + name + ",\n\nYour tickets for " + show + " at " + venue + " on " +
                         when.to_string() + " are confirmed. Total paid: " + amount + ". Guest: " +
                         first_or(profile.friends, rng, "a friend") + ".\n\nEnjoy the show,\n" + venue;
                break;
            }
            case TemplateKind::kWorkMeeting: {
                const std::string colleague = first_or(profile.coworkers, rng, "A colleague");
                const std::string topic = pick(rng, kTopics);
                e.sender_name = colleague;
                e.subject = "Meeting: " + topic;
                e.body = "Hi " + name + ",\n\nLet's meet on " + when.to_string() + " at " + office + " for the " +
                         topic + ".\n\nThanks,\n" + colleague;
                break;
            }
        }
        e.from_address = slugify(e.sender_name) + "@example.com";
        out.push_back(Artifact{std::move(e), i, Direction::kReceived});
    }
    return out;
}

}  // namespace tracegen
