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

#include <functional>
#include <string_view>
#include <vector>

#include "tracegen/json.hpp"
#include "tracegen/schema.hpp"

namespace tracegen {

// Additional checks layered on a schema (cross-field invariants and the like).
using ExtraValidator = std::function<std::vector<Violation>(const Json&)>;

// Every balanced top-level-looking JSON object or array embedded in `raw`, in
// order of their opening bracket. Code fences and surrounding prose are
// skipped; no other repair is attempted.
std::vector<Json> json_candidates(std::string_view raw, std::size_t max_candidates = 64);

// Like json_candidates, but a parsed value's interior is not searched again,
// so only outermost values are returned.
std::vector<Json> json_top_level(std::string_view raw);

// The first JSON value in `raw` that validates against `schema` (and `extra`,
// when given).
//
// Throws Error(kNoJsonFound) when no candidate parses, and
// Error(kSchemaViolation) carrying the first parsed candidate's violations
// when candidates parse but none validates.
Json extract_json(std::string_view raw, SchemaId schema, const ExtraValidator& extra = {});

}  // namespace tracegen
