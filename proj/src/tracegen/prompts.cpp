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

#include "tracegen/prompts.hpp"

namespace tracegen::prompts {
namespace {

constexpr std::string_view kPersonaSystem = "You are the Persona Agent of a synthetic data pipeline.";
constexpr std::string_view kEventSystem = "You are the Event Agent of a synthetic data pipeline.";
constexpr std::string_view kArtifactSystem = "You are the Artifact Generator Agent of a synthetic data pipeline.";
constexpr std::string_view kCriticSystem = "You are a Critic Agent of a synthetic data pipeline.";
constexpr std::string_view kJudgeSystem = "You are a careful evaluator. Answer in JSON.";

constexpr std::string_view kProfileTemplate = R"(Role:
You are tasked with writing a novel that captures life in the modern world.

Mission:
Your primary task is to develop a detailed concept for your novel's protagonist. This includes articulating specifics about their job, personal life, and social connections. You must organize and present this concept in a JSON format.

Task Requirements:
1. Populate each provided field relevant to the protagonist's life, including personal characteristics and daily routines. If a specific field (e.g., classmates) does not apply to your character design, omit this field entirely.
2. Any information you include must align with the initial input. If additional information is necessary and was not provided in the input, extrapolate reasonably based on the available data. Avoid using placeholders such as "not specified" or seeking further clarification.
3. Choose a name for your protagonist reflecting their gender and ethnicity to ensure authenticity and sensitivity.
4. Factor in the protagonist's income level when outlining their lifestyle, specifically their holiday and vacation activities.
5. Ensure all content is original and, when formatting your response, reference only the structure - not the content - of provided examples.
6. All output keys should be in English, and all values should be in the user's local language.
7. The protagonist's nationality should reflect only the nationality indicated on their passport, while the protagonist's residence address must correspond to the specified locale in the input.

Input:
The protagonist's profile should be JSON formatted and include:
- name: the protagonist's full name
- locale: language and geographic location
- timezone: local timezone
- age: age of the protagonist (string value)
- gender: gender identity
- income: income bracket
- ethnicity: ethnic background
- family_setup: description of familial relationships
- nationality: the protagonist's nationality

Output:
Your output should be a detailed JSON formatted document expanding upon the input and including additional fields such as:
- surname: protagonist's surname, resolved from the full name.
- given_name: protagonist's given name, resolved from the full name.
- middle_name: protagonist's middle name (if any), resolved from the full name. Omit this field if inapplicable.
- nicknames: list of protagonist's nicknames, in the user's local language.
- email: randomly generated email address using realistic username and domain conventions based on locale.
- phone: random generated phone number adhering to the locale's format.
- eye_color: one of [black, blue, brown, gold, gray, green, silver, white].
- hair_color: one of [black, blue, brown, gold, gray, green, silver, white].
- height: physical height.
- weight: physical weight.
- occupation: detailed job role, written in the user's local language.
- weekdays_routines: narrative of a typical weekday, written in the local language.
- weekend_routines: narrative of a typical weekend, written in the local language.
- life_events_for_holidays_and_vacations: description of holidays and vacation practices, written in the local language.
- family_members: list including names, ages, relations, occupations, and workplace/school addresses - all in the local language, with realistic naming conventions for the locale. Each entry has the keys name, age, relation, occupation, address.
- friends: list of five friends' names in the local language, with culturally correct name order and spacing.
- coworkers: list of eight coworkers' names in the local language, with proper format.
- classmates: if applicable, list of ten classmates' names in the local language, formatted correctly.
- home_address: realistic residential address in the local language, aligned with the locale.
- office_address: realistic office address in the local language, aligned with the locale (omit if inapplicable).
- school_address: realistic school address in the local language (omit if inapplicable).

Initial input:
{input}

Output:)";

constexpr std::string_view kSeedEventsTemplate = R"(Task
Brainstorm possible events based on the profile. Consider all possibilities, and generate at least {num_seed_events} events as comprehensive and diverse as possible.

Here are some tips for brainstorming:
- Analyze Lifestyle. Identify daily, weekly, and seasonal patterns. Consider work, hobbies, social life, and personal responsibilities.
- Consider Recent Life. Reflect on important events in the past two years.
- Incorporate Professional and Personal Roles. Include work-related tasks. Consider personal interests.
- Account for Special Occasions and Holidays. Include holiday traditions, family gatherings, and vacations. Consider birthdays, anniversaries, and cultural events.
- Think About Common Responsibilities. Cover financial management. Include household chores.
- Consider Social and Recreational Activities. Identify interactions with family, friends, and coworkers. Include leisure activities like travel, hobbies, or fitness.
- Factor in Unexpected and Rare Events. Account for emergencies (e.g., medical visits, car repairs). Consider special projects or one-time commitments.

Output Format
A JSON list of objects, each with the following fields:
- event: A clear and specific event title.
- detailed_description: A comprehensive explanation of the event for consistency and coherence.
- frequency: A string representing how often the event occurs, chosen from the predefined options: ["daily", "weekly", "monthly", "seasonally", "yearly", "once"].

Input
{profile}

Output
Let's think step by step.
First, I need to break down the weekday and weekend routines into a list of events. Second, I need to brainstorm for events in the recent life.)";

constexpr std::string_view kEventFields = R"(- event: A clear and specific event title.
- detailed_description: A comprehensive explanation of the event to ensure consistency and coherence.
- frequency: How often the event occurs - one of: ["daily", "weekly", "monthly", "seasonally", "yearly", "once"].
- location: A realistic and precise address that fits the event, suitable for a calendar entry. If the event could take place in multiple locations, leave this blank. You can reference locations from the profile or suggest reasonable alternatives.
- other_participants: A list of attendees, selected only from the names provided in the profile. If no additional participants are needed, leave this blank.
- start_time: The start time in RFC3339 format without a time zone.
- end_time: The end time in RFC3339 format without a time zone.)";

constexpr std::string_view kAlignTemplate = R"(Task:
You will receive a persona profile and a seed event drawn from a general pool of everyday activities. Adapt the seed event so that it fits this persona: change the subject, setting, people, and timing wherever the original does not match the persona's occupation, interests, family, or locale, while keeping the kind of activity recognizable.

Output Format:
A single JSON object with the following fields:
{fields}

Profile:
{profile}

Seed event:
{seed_event}

Output:)";

constexpr std::string_view kExpandTemplate = R"(Input Format:

You will receive a JSON object, representing an event with the following fields:
- event: A clear and specific event title.
- detailed_description: A comprehensive explanation of the event to ensure consistency and coherence.
- frequency: How often the event occurs - one of: ["daily", "weekly", "monthly", "seasonally", "yearly", "once"].
- location: A realistic and precise address that fits the event, suitable for a calendar entry. If the event could take place in multiple locations, it is left blank.
- other_participants: A list of attendees, selected only from the names provided in the profile. If no additional participants are needed, it is left blank.
- start_time: The start time in RFC3339 format without a time zone.
- end_time: The end time in RFC3339 format without a time zone.

Your Task:

You must analyze the event and brainstorm relevant events as comprehensively as possible. Here are some tips:
- Think of All Possible Variations. Account for different circumstances. Consider different methods or approaches. Consider various subcategories.
- Consider Different Perspectives. Look at the event from a personal, professional, logistical, and financial angle.
- Include Decision Points and Contingencies. Consider what happens if something goes wrong. Identify common problems and possible solutions.
- Cover Tools, Resources, and External Interactions. Mention necessary tools. Identify people involved.
If the event is atomic and has no meaningful sub-events, output an empty list [].

Output Format:

A list of JSON objects, representing relevant events with the following fields:
{fields}

Profile:
{profile}

Examples:
{examples}

Your Turn

Input:
{input_event}

Output:)";

constexpr std::string_view kExpansionExamples = R"(Input:
{
  "event": "Book flights for the research conference",
  "detailed_description": "Compare airlines and book round-trip flights to the conference city within the travel budget.",
  "frequency": "once",
  "location": "",
  "other_participants": [],
  "start_time": "2024-05-02T20:00:00",
  "end_time": "2024-05-02T20:45:00"
}
Output:
[
  {
    "event": "Receive booking confirmation",
    "detailed_description": "The airline emails the itinerary and booking reference right after payment.",
    "frequency": "once",
    "location": "",
    "other_participants": [],
    "start_time": "2024-05-02T20:50:00",
    "end_time": "2024-05-02T20:55:00"
  },
  {
    "event": "Receive boarding pass",
    "detailed_description": "After online check-in opens the day before departure, the boarding pass arrives in the wallet app.",
    "frequency": "once",
    "location": "",
    "other_participants": [],
    "start_time": "2024-06-09T08:00:00",
    "end_time": "2024-06-09T08:05:00"
  }
])";

constexpr std::string_view kReflectTemplate = R"(Task:
Review the event below, which was produced while expanding this persona's life into a tree of events. Check that it gives sufficient detail, follows a logical structure and timeline, is consistent with the persona, and is likely to leave digital records such as emails, messages, calendar entries, reminders, or wallet passes.

If the event is acceptable, answer {"verdict": "approve"}.
Otherwise answer {"verdict": "revise", "event": {...}} where "event" is the corrected event with exactly these fields:
{fields}

Profile:
{profile}

Event:
{event}

Output:)";

constexpr std::string_view kChooseTemplate = R"(Task:
Decide which digital artifact the event below most plausibly leaves in the persona's accounts, and whether the persona sent it or received it.

Options for "kind": "email", "message_thread" (a text message exchange), "calendar_entry" (a calendar invitation), "reminder", "wallet_pass" (a boarding pass, ticket, membership card, or coupon).
Options for "direction": "sent", "received".

Answer with a JSON object: {"kind": "...", "direction": "..."}

Profile:
{profile}

Event:
{event}

Output:)";

constexpr std::string_view kOutlineTemplate = R"(Task:

You are a specialist in creating {artifact_plural}. You will be provided with a JSON object representing an event.
Your objective is to generate a realistic outline for the body of the {artifact} that {full_name} {sent_or_received}.

Perspective: {full_name} <{email}> {sent_or_received} this {artifact}.

Event Details (JSON):
{event}

Note: Some fields are guaranteed to be present (event, detailed_description, start_time, end_time, location, other_participants), while others are optional and should only be used if relevant.

Instructions:
1. Output a detailed outline (not a fully written {artifact}) of the sender's {artifact}.
2. You do not need to use all JSON fields, just those that make sense for the context of the {artifact}.
3. Highlight any actions, requests, or follow-up details needed from the recipients.
4. Choose an appropriate tone suitable for the event context.
5. Do not include placeholder text. Instead, use actual data or reasonable, context-based values.
6. You may include additional resources or references, if applicable.

Final Deliverable:
Provide a structured outline (like headings and bullet points) of the {artifact} body that {full_name} {sent_or_received}.
The outline should reflect the sender's viewpoint.

Outline:)";

constexpr std::string_view kEmailContract = R"(The final email must be structured as a JSON object with the following keys:
- sender_name: The name of the sender.
- from_address: The sender's email address.
- to_address: The receiver's email address.
- send_time: The time the email is sent in RFC3339 format without a time zone.
- subject: A concise and relevant subject line.
- body: The complete email body text, following the outline.)";

constexpr std::string_view kThreadContract = R"(The final text message exchange must be structured as a JSON object with the following keys:
- participants: The names of everyone in the conversation (at least two, including the persona).
- messages: The ordered list of messages, each an object with keys sender (one of the participants), send_time (RFC3339 format without a time zone, never earlier than the previous message), and text.)";

constexpr std::string_view kCalendarContract = R"(The final calendar invitation must be structured as a JSON object with the following keys:
- title: The event title shown in the calendar.
- start_time: The start time in RFC3339 format without a time zone.
- end_time: The end time in RFC3339 format without a time zone, not before start_time.
- location: Where the event takes place (may be empty).
- attendees: The list of invited people's names.)";

constexpr std::string_view kReminderContract = R"(The final reminder must be structured as a JSON object with the following keys:
- title: What the persona needs to be reminded of.
- due_time: When the reminder fires, in RFC3339 format without a time zone.
- note: Optional extra details.)";

constexpr std::string_view kWalletContract = R"(The final wallet pass must be structured as a JSON object with the following keys:
- pass_kind: One of "boarding_pass", "ticket", "membership", "coupon".
- title: The name shown on the pass.
- reference_code: The booking reference, ticket number, member id, or coupon code.
- valid_from: When the pass becomes valid, in RFC3339 format without a time zone.
- valid_until: When the pass expires, in RFC3339 format without a time zone, not before valid_from.)";

constexpr std::string_view kGenerateTemplate = R"(You are a specialist in writing {artifact_plural}. You will be provided with an outline of an {artifact} along with additional reference content. Your job is to craft a realistic, engaging, and well-structured {artifact} based on the outline.

Instructions:

1. Input Details:
- Outline: You will receive an outline of the {artifact}, which includes the main points and structure to cover.
- Additional Reference: You will also be provided with a JSON object containing event-related details. The fields that are always present are: event, detailed_description, start_time, end_time, location, other_participants.
- Other fields in the JSON object are optional. Note: Use only the relevant fields to create a clear and effective {artifact}.
- Note: You do not need to incorporate every field from the JSON object; only use the information that is relevant to create a clear and effective {artifact}.

2. Composition Guidelines:
- Structure & Tone: Write a realistic and engaging {artifact} that follows the provided outline. Choose a tone that matches the context of the event and the intended recipients. For example, for an emergency preparedness notice, use a calm, reassuring, and informative tone; for a celebratory event, a more upbeat tone is suitable.
- Content Integration: Use the outline as the framework for your {artifact}. Incorporate relevant details from the additional reference JSON object to enhance the content. Ensure the {artifact} includes critical event information such as event name, detailed description, dates, location, and any important context provided.
- Clarity and Readability: Organize the {artifact} into clear sections based on the outline. Use headings, paragraphs, and bullet points where appropriate to enhance readability.
- Relevance: Only include information from the JSON object that directly contributes to the purpose and clarity of the {artifact}. Avoid unnecessary details that do not add value or could distract from the main message. You may add extra details that complement the outline and reference material if needed.
- Call-to-Action: Including specific next steps or call-to-action is optional. Only include them if they enhance the clarity and usefulness of the {artifact}.

3. Output Structure:
{contract}

4. Process:
- Start by reviewing the provided outline and event reference.
- Develop a cohesive {artifact} that aligns with the outline and appropriately integrates relevant event details.
- Ensure that the {artifact} is organized, clear, and engaging, following standard conventions.

Perspective: {full_name} <{email}> {sent_or_received} this {artifact}.

Outline:
{outline}

Additional References:
{event})";

constexpr std::string_view kCritiqueTemplate = R"(Focus: {focus}

You are an expert in {artifact} review and writing. I will provide you with an {artifact}, and I need you to offer detailed, constructive feedback to help improve it.

Judge only the focus above. If the {artifact} needs no change for this focus, approve it.
Answer with a JSON object: {"verdict": "approve" or "revise", "feedback": "..."}; feedback is required when the verdict is "revise".

Persona profile:
{profile}

Event:
{event}

Here is the {artifact} for review:
{artifact_json})";

constexpr std::string_view kReviseTemplate = R"(You are an expert at revising {artifact_plural}. You will be provided with:
1. An original {artifact}.
2. A set of suggestions on how to improve that {artifact}.

Objective:
- Transform the original {artifact} into a new version that incorporates the given suggestions.
- Ensure the final output strictly follows the JSON structure below.

Output Format:
{contract}

Instructions:
- Retain any key information from the original {artifact}.
- Incorporate the suggestions provided where relevant.
- The final {artifact} should reflect a polished, improved version of the original.
- Do not add any additional keys; only use the keys specified above.

Original {artifact_title}:
{original}

Suggestions:
{suggestions})";

constexpr std::string_view kJudgeTemplate = R"(You are an expert evaluator for synthetic communication data.

Your task is to evaluate the following email based on multiple quality dimensions.

Carefully read the email content and provide structured ratings and feedback.

Evaluation Dimensions

1. Tone
  - Is the tone appropriate for the context?
  - Is it consistent throughout the email?
  - Is it aligned with the intended audience?
2. Fluency
  - Is the writing smooth and grammatically correct?
  - Does it sound natural to read?
3. Coherence
  - Are the ideas logically connected?
  - Is the email easy to follow?
4. Informativeness
  - Does the text provide useful, accurate, and complete information?
  - Does it avoid missing or misleading details?
5. Engagement
  - Does the text capture and maintain the reader's attention?
  - Does it encourage the reader to take action if needed?

Scoring Guideline (for each dimension)

5 = Excellent: Fully meets requirements, no issues.
4 = Good: Mostly meets requirements, with minor flaws.
3 = Fair: Some issues present, partially acceptable.
2 = Poor: Major issues, mostly unacceptable.
1 = Very Poor: Completely fails the requirement, unusable.

Output Requirements

Give a 1-5 score for each dimension with a short explanation (1-2 sentences).
Provide an overall evaluation with an overall score (average or holistic).
Use JSON format for the output.

Example Output

{
  "Tone": {
    "score": 4,
    "explanation": "Tone is polite and suitable for a business email, but slightly too formal for the intended young audience."
  },
  "Fluency": {
    "score": 5,
    "explanation": "Grammar and flow are flawless; very natural phrasing."
  },
  "Coherence": {
    "score": 4,
    "explanation": "Message is generally easy to follow, though one sentence feels abrupt."
  },
  "Informativeness": {
    "score": 5,
    "explanation": "All key details are included and accurate."
  },
  "Engagement": {
    "score": 3,
    "explanation": "The message provides information but lacks a strong hook to engage the reader."
  },
  "Overall": {
    "score": 4.2,
    "summary": "Well-written and informative, but slightly formal and could be more engaging."
  }
}

Input

input: {input})";

std::string_view contract_for(ArtifactKind kind) {
    switch (kind) {
        case ArtifactKind::kEmail: return kEmailContract;
        case ArtifactKind::kMessageThread: return kThreadContract;
        case ArtifactKind::kCalendarEntry: return kCalendarContract;
        case ArtifactKind::kReminder: return kReminderContract;
        case ArtifactKind::kWalletPass: return kWalletContract;
    }
    return kEmailContract;
}

std::string plural(ArtifactKind kind) {
    if (kind == ArtifactKind::kMessageThread) return "text message exchanges";
    return std::string(display_name(kind)) + "s";
}

std::string title_case(std::string_view s) {
    std::string out(s);
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
    return out;
}

std::string pretty(const Json& j) { return j.dump(2); }

GenerationRequest make(std::string_view system, std::string user, std::optional<SchemaId> schema,
                       std::string_view role) {
    GenerationRequest r;
    r.system_prompt = std::string(system);
    r.user_prompt = std::move(user);
    r.schema_hint = schema;
    r.agent_role = std::string(role);
    return r;
}

std::vector<std::pair<std::string, std::string>> persona_values(ArtifactKind kind, Direction direction,
                                                                const Json& profile) {
    return {{"artifact", std::string(display_name(kind))},
            {"artifact_plural", plural(kind)},
            {"full_name", json_string(profile, "name", "the persona")},
            {"email", json_string(profile, "email")},
            {"sent_or_received", std::string(to_string(direction))}};
}

}  // namespace

std::string render(std::string_view tmpl, const std::vector<std::pair<std::string, std::string>>& values) {
    std::string out;
    out.reserve(tmpl.size() * 2);
    std::size_t i = 0;
    while (i < tmpl.size()) {
        if (tmpl[i] == '{') {
            const auto close = tmpl.find('}', i + 1);
            if (close != std::string_view::npos) {
                const auto key = tmpl.substr(i + 1, close - i - 1);
                bool replaced = false;
                for (const auto& [k, v] : values) {
                    if (k == key) {
                        out += v;
                        replaced = true;
                        break;
                    }
                }
                if (replaced) {
                    i = close + 1;
                    continue;
                }
            }
        }
        out += tmpl[i++];
    }
    return out;
}

GenerationRequest profile(const Json& demographic_input) {
    return make(kPersonaSystem, render(kProfileTemplate, {{"input", pretty(demographic_input)}}), SchemaId::kProfile,
                role::kPersona);
}

GenerationRequest seed_events(std::string_view persona, std::size_t count) {
    auto r = make(kEventSystem,
                  render(kSeedEventsTemplate, {{"num_seed_events", std::to_string(count)}, {"profile", std::string(persona)}}),
                  SchemaId::kSeedEventList, role::kSeedEvents);
    r.max_output_tokens = 8192;
    return r;
}

GenerationRequest align_event(const Json& seed_event, const Json& profile) {
    return make(kEventSystem,
                render(kAlignTemplate,
                       {{"fields", std::string(kEventFields)}, {"profile", pretty(profile)}, {"seed_event", pretty(seed_event)}}),
                SchemaId::kExpandedEvent, role::kAlign);
}

GenerationRequest expand_event(const Json& event, const Json& profile) {
    auto r = make(kEventSystem,
                  render(kExpandTemplate, {{"fields", std::string(kEventFields)},
                                           {"profile", pretty(profile)},
                                           {"examples", std::string(kExpansionExamples)},
                                           {"input_event", pretty(event)}}),
                  SchemaId::kExpandedEventList, role::kExpand);
    r.max_output_tokens = 4096;
    return r;
}

GenerationRequest reflect_event(const Json& event, const Json& profile) {
    return make(kEventSystem,
                render(kReflectTemplate,
                       {{"fields", std::string(kEventFields)}, {"profile", pretty(profile)}, {"event", pretty(event)}}),
                SchemaId::kReflection, role::kReflect);
}

GenerationRequest choose_artifact(const Json& event, const Json& profile) {
    auto r = make(kArtifactSystem, render(kChooseTemplate, {{"profile", pretty(profile)}, {"event", pretty(event)}}),
                  SchemaId::kArtifactChoice, role::kChooseArtifact);
    r.max_output_tokens = 256;
    return r;
}

GenerationRequest outline(ArtifactKind kind, Direction direction, const Json& event, const Json& profile) {
    auto values = persona_values(kind, direction, profile);
    values.emplace_back("event", pretty(event));
    return make(kArtifactSystem, render(kOutlineTemplate, values), std::nullopt, role::kOutline);
}

GenerationRequest generate_artifact(ArtifactKind kind, Direction direction, std::string_view outline_text,
                                    const Json& event, const Json& profile) {
    auto values = persona_values(kind, direction, profile);
    values.emplace_back("contract", std::string(contract_for(kind)));
    values.emplace_back("outline", std::string(outline_text));
    values.emplace_back("event", pretty(event));
    return make(kArtifactSystem, render(kGenerateTemplate, values), schema_for(kind), role::kGenerate);
}

GenerationRequest critique(CriticAxis axis, ArtifactKind kind, const Json& artifact, const Json& event,
                           const Json& profile) {
    std::string focus;
    switch (axis) {
        case CriticAxis::kEventConsistency:
            focus = "consistency with the event. Flag any contradiction with the event's details, times, place, or people.";
            break;
        case CriticAxis::kPersonaConsistency:
            focus = "consistency with the persona. Flag anything that contradicts the persona's known attributes, "
                    "relationships, or locale.";
            break;
        case CriticAxis::kRealismFluency:
            focus = "realism and fluency. Flag unnatural language and anything a real " + std::string(display_name(kind)) +
                    " would not contain.";
            break;
    }
    auto r = make(kCriticSystem,
                  render(kCritiqueTemplate, {{"focus", focus},
                                             {"artifact", std::string(display_name(kind))},
                                             {"profile", pretty(profile)},
                                             {"event", pretty(event)},
                                             {"artifact_json", pretty(artifact)}}),
                  SchemaId::kCritique, std::string(role::kCritic) + ":" + std::string(to_string(axis)));
    r.max_output_tokens = 1024;
    return r;
}

GenerationRequest revise(ArtifactKind kind, const Json& artifact, std::string_view suggestions) {
    return make(kArtifactSystem,
                render(kReviseTemplate, {{"artifact", std::string(display_name(kind))},
                                         {"artifact_plural", plural(kind)},
                                         {"artifact_title", title_case(display_name(kind))},
                                         {"contract", std::string(contract_for(kind))},
                                         {"original", pretty(artifact)},
                                         {"suggestions", std::string(suggestions)}}),
                schema_for(kind), role::kRevise);
}

GenerationRequest judge(std::string_view email) {
    auto r = make(kJudgeSystem, render(kJudgeTemplate, {{"input", std::string(email)}}), SchemaId::kJudge, role::kJudge);
    r.max_output_tokens = 1024;
    return r;
}

std::string_view judge_template() { return kJudgeTemplate; }

}  // namespace tracegen::prompts
