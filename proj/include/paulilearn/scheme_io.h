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

#ifndef PAULILEARN_SCHEME_IO_H
#define PAULILEARN_SCHEME_IO_H

#include <string>

#include "json.hpp"
#include "paulilearn/channel_io.h"
#include "paulilearn/scheme.h"

namespace paulilearn {

// Scheme file:
//   { "n": int, "depth": int,
//     "initial": [ { "outcome": int, "state": M }, ... ],
//     "instruments": [ { "history": [o_0, ..], "branches": [ { "outcome": int, "kraus": [M, ..] } ] } ],
//     "povms": [ { "history": [o_0, .., o_{depth-1}], "elements": [ { "outcome": int, "matrix": M } ] } ] }
// A matrix M is an array of rows, each an array of [re, im] pairs.
// "initial_state": M may replace "initial" for a single unlabeled state.

nlohmann::json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const nlohmann::json &j);

/// Parses and validates (validate_policy); unknown keys are rejected.
SchemePolicy policy_from_json(const nlohmann::json &j);
nlohmann::json policy_to_json(const SchemePolicy &policy);

SchemePolicy read_policy_file(const std::string &path);
void write_policy_file(const std::string &path, const SchemePolicy &policy);

/// A file holding either one scheme or an array of schemes.
std::vector<SchemePolicy> read_policy_list_file(const std::string &path);

}  // namespace paulilearn

#endif
