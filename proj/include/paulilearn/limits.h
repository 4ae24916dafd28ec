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

#ifndef PAULILEARN_LIMITS_H
#define PAULILEARN_LIMITS_H

#include <cstddef>

namespace paulilearn {

/// Dense scheme simulation works on at most 4 qubits (16x16 matrices).
inline constexpr unsigned kMaxSchemeQubits = 4;

/// Cap on dense 4^n channel arrays. Default 13, override with PAULILEARN_MAX_N.
unsigned max_channel_qubits();

/// Cap on enumerated outcome histories. Default 1e5, override with
/// PAULILEARN_MAX_LEAVES.
std::size_t max_enumeration_leaves();

}  // namespace paulilearn

#endif
