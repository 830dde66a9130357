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

#include <mutex>
#include <string>
#include <vector>

namespace tracegen {

// Collects non-fatal warnings (degraded nodes, dropped participants, critic
// outages). Thread-safe.
class Diagnostics {
public:
    void warn(std::string message) {
        std::lock_guard lock(mu_);
        warnings_.push_back(std::move(message));
    }

    std::vector<std::string> warnings() const {
        std::lock_guard lock(mu_);
        return warnings_;
    }

    std::size_t size() const {
        std::lock_guard lock(mu_);
        return warnings_.size();
    }

    void clear() {
        std::lock_guard lock(mu_);
        warnings_.clear();
    }

private:
    mutable std::mutex mu_;
    std::vector<std::string> warnings_;
};

}  // namespace tracegen
