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

#ifndef PAULILEARN_FORMAT_H
#define PAULILEARN_FORMAT_H

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace paulilearn {

/// Shortest decimal that parses back to the same double. Locale independent.
std::string format_double(double value);

/// Writes one comma separated row followed by '\n'. Fields are written as is.
void write_csv_row(std::ostream &out, std::initializer_list<std::string_view> fields);

}  // namespace paulilearn

#endif
