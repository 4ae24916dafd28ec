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

#ifndef PAULILEARN_TOOLS_COMMANDS_H
#define PAULILEARN_TOOLS_COMMANDS_H

#include <cstdint>

#include "CLI11.hpp"

namespace paulilearn::cli {

struct GlobalOptions {
    std::uint64_t seed = 0;
    int threads = 0;
};

/// Adds every subcommand to `app`. The selected subcommand stores its exit
/// status in `exit_code` when it runs.
void register_commands(CLI::App &app, const GlobalOptions &global, int &exit_code);

}  // namespace paulilearn::cli

#endif
