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

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "json.hpp"

namespace {

void print_error(const std::string &kind, const std::string &message) {
    nlohmann::json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pauli channel learning: transforms, protocol simulation, bounds and certification."};
    app.name("paulilearn");
    app.require_subcommand(1);
    app.fallthrough();

    paulilearn::cli::GlobalOptions global;
    app.add_option("--seed", global.seed, "Master seed for every random stream")->capture_default_str();
    app.add_option("--threads", global.threads, "OpenMP threads (0 keeps the runtime default)")
        ->check(CLI::NonNegativeNumber);

    int exit_code = 0;
    paulilearn::cli::register_commands(app, global, exit_code);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        print_error("usage", e.what());
        return 2;
    } catch (const std::invalid_argument &e) {
        print_error("invalid_argument", e.what());
        return 1;
    } catch (const std::out_of_range &e) {
        print_error("out_of_range", e.what());
        return 1;
    } catch (const std::length_error &e) {
        print_error("length_error", e.what());
        return 1;
    } catch (const std::exception &e) {
        print_error("runtime_error", e.what());
        return 1;
    }
    return exit_code;
}
