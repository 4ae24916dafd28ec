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

#include "paulilearn/channel_io.h"

#include <fstream>
#include <stdexcept>

#include "paulilearn/symplectic_transform.h"

namespace paulilearn {

namespace {

const nlohmann::json &require(const nlohmann::json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing required field \"") + key + "\"");
    }
    return j.at(key);
}

unsigned require_n(const nlohmann::json &j) {
    const auto &n = require(j, "n");
    if (!n.is_number_unsigned()) {
        throw std::invalid_argument("field \"n\" must be a nonnegative integer");
    }
    return n.get<unsigned>();
}

}  // namespace

Representation parse_representation(const std::string &name) {
    if (name == "error_rates") {
        return Representation::ErrorRates;
    }
    if (name == "eigenvalues") {
        return Representation::Eigenvalues;
    }
    throw std::invalid_argument("unknown representation \"" + name + "\" (expected error_rates or eigenvalues)");
}

std::string representation_name(Representation r) {
    return r == Representation::ErrorRates ? "error_rates" : "eigenvalues";
}

LoadedChannel channel_from_json(const nlohmann::json &j, double tol) {
    for (const auto &[key, value] : j.items()) {
        if (key != "n" && key != "representation" && key != "values" && key != "validation") {
            throw std::invalid_argument("unexpected field \"" + key + "\" in channel file");
        }
    }
    unsigned n = require_n(j);
    const auto &rep_field = require(j, "representation");
    if (!rep_field.is_string()) {
        throw std::invalid_argument("field \"representation\" must be a string");
    }
    Representation rep = parse_representation(rep_field.get<std::string>());
    const auto &values = require(j, "values");
    if (!values.is_array()) {
        throw std::invalid_argument("field \"values\" must be an array");
    }
    std::vector<double> data;
    data.reserve(values.size());
    for (const auto &v : values) {
        if (!v.is_number()) {
            throw std::invalid_argument("field \"values\" must contain only numbers");
        }
        data.push_back(v.get<double>());
    }
    if (n > kMaxIndexQubits || data.size() != pauli_count(n)) {
        throw std::invalid_argument("expected 4^" + std::to_string(n) + " values, got " + std::to_string(data.size()));
    }
    PauliChannel channel = rep == Representation::ErrorRates ? PauliChannel::from_error_rates(std::move(data))
                                                              : PauliChannel::from_eigenvalues(std::move(data));
    ValidityReport report = validate(channel, tol);
    return {std::move(channel), rep, report};
}

nlohmann::json channel_to_json(const PauliChannel &channel, Representation r) {
    auto values = r == Representation::ErrorRates ? channel.error_rates() : channel.eigenvalues();
    nlohmann::json j;
    j["n"] = channel.num_qubits();
    j["representation"] = representation_name(r);
    j["values"] = std::vector<double>(values.begin(), values.end());
    return j;
}

nlohmann::json validity_to_json(const ValidityReport &report) {
    nlohmann::json j;
    j["valid"] = report.valid();
    j["trace_preserving"] = report.trace_preserving;
    j["eigenvalues_in_range"] = report.eigenvalues_in_range;
    j["completely_positive"] = report.completely_positive;
    j["eigenvalue_zero"] = report.eigenvalue_zero;
    j["max_abs_eigenvalue"] = report.max_abs_eigenvalue;
    j["min_error_rate"] = report.min_error_rate;
    j["min_error_rate_index"] = report.min_error_rate_index;
    j["failures"] = report.failures();
    return j;
}

nlohmann::json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

LoadedChannel read_channel_file(const std::string &path, double tol) {
    try {
        return channel_from_json(read_json_file(path), tol);
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_channel_file(const std::string &path, const PauliChannel &channel, Representation r,
                        const ValidityReport *report) {
    nlohmann::json j = channel_to_json(channel, r);
    if (report != nullptr) {
        j["validation"] = validity_to_json(*report);
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << j.dump(2) << '\n';
}

Partition partition_from_json(const nlohmann::json &j) {
    unsigned n = require_n(j);
    if (n > kMaxIndexQubits) {
        throw std::invalid_argument("partition qubit count too large");
    }
    const auto &blocks_field = require(j, "blocks");
    if (!blocks_field.is_array()) {
        throw std::invalid_argument("field \"blocks\" must be an array of arrays");
    }
    std::vector<std::vector<std::uint64_t>> blocks;
    for (const auto &b : blocks_field) {
        if (!b.is_array()) {
            throw std::invalid_argument("field \"blocks\" must be an array of arrays");
        }
        std::vector<std::uint64_t> block;
        for (const auto &idx : b) {
            if (!idx.is_number_unsigned()) {
                throw std::invalid_argument("partition indices must be nonnegative integers");
            }
            block.push_back(idx.get<std::uint64_t>());
        }
        blocks.push_back(std::move(block));
    }
    return Partition(n, std::move(blocks));
}

nlohmann::json partition_to_json(const Partition &partition) {
    nlohmann::json j;
    j["n"] = partition.num_qubits();
    j["blocks"] = partition.blocks();
    return j;
}

Partition read_partition_file(const std::string &path) {
    try {
        return partition_from_json(read_json_file(path));
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace paulilearn
