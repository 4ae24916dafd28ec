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

#ifndef PAULILEARN_CHANNEL_IO_H
#define PAULILEARN_CHANNEL_IO_H

#include <string>

#include "json.hpp"
#include "paulilearn/channel.h"

namespace paulilearn {

enum class Representation { ErrorRates, Eigenvalues };

Representation parse_representation(const std::string &name);
std::string representation_name(Representation r);

// Channel file:   { "n": int, "representation": "error_rates" | "eigenvalues",
//                   "values": [4^n reals in canonical index order] }
// Partition file: { "n": int, "blocks": [[index, ...], ...] }
// Writers may add a "validation" object to channel files; readers ignore it.

struct LoadedChannel {
    PauliChannel channel;
    Representation representation;
    ValidityReport report;
};

LoadedChannel channel_from_json(const nlohmann::json &j, double tol = kDefaultTolerance);
nlohmann::json channel_to_json(const PauliChannel &channel, Representation r);
nlohmann::json validity_to_json(const ValidityReport &report);

LoadedChannel read_channel_file(const std::string &path, double tol = kDefaultTolerance);
void write_channel_file(const std::string &path, const PauliChannel &channel, Representation r,
                        const ValidityReport *report = nullptr);

Partition partition_from_json(const nlohmann::json &j);
nlohmann::json partition_to_json(const Partition &partition);
Partition read_partition_file(const std::string &path);

/// Reads a whole file as JSON; errors name the path.
nlohmann::json read_json_file(const std::string &path);

}  // namespace paulilearn

#endif
