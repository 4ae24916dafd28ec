// Copyright 2026 The paulilearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paulilearn/limits.h"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace paulilearn {

namespace {

std::size_t env_or(const char *name, std::size_t fallback) {
    const char *value = std::getenv(name);
    if (value == nullptr || *value == '\0') {
        return fallback;
    }
    char *end = nullptr;
    unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end == value || *end != '\0') {
        throw std::invalid_argument(std::string("Environment variable ") + name + " is not an integer: " + value);
    }
    return static_cast<std::size_t>(parsed);
}

}  // namespace

unsigned max_channel_qubits() {
    return static_cast<unsigned>(env_or("PAULILEARN_MAX_N", 13));
}

std::size_t max_enumeration_leaves() {
    return env_or("PAULILEARN_MAX_LEAVES", 100000);
}

}  // namespace paulilearn
