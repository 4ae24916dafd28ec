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

#include "paulilearn/scheme_io.h"

#include <fstream>
#include <initializer_list>
#include <stdexcept>

namespace paulilearn {

namespace {

using nlohmann::json;

void check_keys(const json &j, std::initializer_list<const char *> allowed, const std::string &where) {
    if (!j.is_object()) {
        throw std::invalid_argument(where + " must be an object");
    }
    for (const auto &[key, value] : j.items()) {
        bool ok = false;
        for (const char *a : allowed) {
            ok |= key == a;
        }
        if (!ok) {
            throw std::invalid_argument("unexpected field \"" + key + "\" in " + where);
        }
    }
}

const json &field(const json &j, const char *key, const std::string &where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\" in " + where);
    }
    return *it;
}

unsigned unsigned_field(const json &j, const char *key, const std::string &where) {
    const json &v = field(j, key, where);
    if (!v.is_number_unsigned()) {
        throw std::invalid_argument(std::string("field \"") + key + "\" in " + where +
                                    " must be a nonnegative integer");
    }
    return v.get<unsigned>();
}

const json &array_field(const json &j, const char *key, const std::string &where) {
    const json &v = field(j, key, where);
    if (!v.is_array()) {
        throw std::invalid_argument(std::string("field \"") + key + "\" in " + where + " must be an array");
    }
    return v;
}

History history_from_json(const json &j, const std::string &where) {
    if (!j.is_array()) {
        throw std::invalid_argument("history in " + where + " must be an array");
    }
    History h;
    for (const auto &o : j) {
        if (!o.is_number_unsigned()) {
            throw std::invalid_argument("history in " + where + " must hold nonnegative integers");
        }
        h.push_back(o.get<Outcome>());
    }
    return h;
}

}  // namespace

json matrix_to_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrix must be a nonempty array of rows");
    }
    auto rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = -1;
    Matrix m;
    for (Eigen::Index r = 0; r < rows; r++) {
        const json &row = j[static_cast<std::size_t>(r)];
        if (!row.is_array()) {
            throw std::invalid_argument("matrix rows must be arrays");
        }
        if (cols < 0) {
            cols = static_cast<Eigen::Index>(row.size());
            m.resize(rows, cols);
        } else if (static_cast<Eigen::Index>(row.size()) != cols) {
            throw std::invalid_argument("matrix rows have different lengths");
        }
        for (Eigen::Index c = 0; c < cols; c++) {
            const json &e = row[static_cast<std::size_t>(c)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw std::invalid_argument("matrix entries must be [re, im] number pairs");
            }
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

SchemePolicy policy_from_json(const json &j) {
    const std::string top = "scheme";
    check_keys(j, {"n", "depth", "initial", "initial_state", "instruments", "povms"}, top);
    SchemePolicy policy;
    policy.n = unsigned_field(j, "n", top);
    policy.depth = unsigned_field(j, "depth", top);

    if (j.contains("initial") == j.contains("initial_state")) {
        throw std::invalid_argument("scheme needs exactly one of \"initial\" and \"initial_state\"");
    }
    if (j.contains("initial_state")) {
        policy.initial_ensemble[0] = matrix_from_json(j["initial_state"]);
    } else {
        for (const auto &entry : array_field(j, "initial", top)) {
            check_keys(entry, {"outcome", "state"}, "initial entry");
            Outcome o = unsigned_field(entry, "outcome", "initial entry");
            if (!policy.initial_ensemble.emplace(o, matrix_from_json(field(entry, "state", "initial entry"))).second) {
                throw std::invalid_argument("duplicate initial outcome " + std::to_string(o));
            }
        }
    }

    if (j.contains("instruments")) {
        for (const auto &entry : array_field(j, "instruments", top)) {
            check_keys(entry, {"history", "branches"}, "instrument entry");
            History h = history_from_json(field(entry, "history", "instrument entry"), "instrument entry");
            Instrument instr;
            for (const auto &b : array_field(entry, "branches", "instrument entry")) {
                check_keys(b, {"outcome", "kraus"}, "branch");
                Outcome o = unsigned_field(b, "outcome", "branch");
                KrausBranch branch;
                for (const auto &k : array_field(b, "kraus", "branch")) {
                    branch.kraus_ops.push_back(matrix_from_json(k));
                }
                if (branch.kraus_ops.empty()) {
                    throw std::invalid_argument("branch " + std::to_string(o) + " has no Kraus operators");
                }
                if (!instr.branches.emplace(o, std::move(branch)).second) {
                    throw std::invalid_argument("duplicate branch outcome " + std::to_string(o));
                }
            }
            if (!policy.instruments.emplace(std::move(h), std::move(instr)).second) {
                throw std::invalid_argument("duplicate instrument history");
            }
        }
    }

    for (const auto &entry : array_field(j, "povms", top)) {
        check_keys(entry, {"history", "elements"}, "povm entry");
        History h = history_from_json(field(entry, "history", "povm entry"), "povm entry");
        Povm povm;
        for (const auto &e : array_field(entry, "elements", "povm entry")) {
            check_keys(e, {"outcome", "matrix"}, "povm element");
            Outcome o = unsigned_field(e, "outcome", "povm element");
            if (!povm.elements.emplace(o, matrix_from_json(field(e, "matrix", "povm element"))).second) {
                throw std::invalid_argument("duplicate POVM outcome " + std::to_string(o));
            }
        }
        if (!policy.final_povms.emplace(std::move(h), std::move(povm)).second) {
            throw std::invalid_argument("duplicate POVM history");
        }
    }

    validate_policy(policy);
    return policy;
}

json policy_to_json(const SchemePolicy &policy) {
    json j;
    j["n"] = policy.n;
    j["depth"] = policy.depth;
    j["initial"] = json::array();
    for (const auto &[o, rho] : policy.initial_ensemble) {
        j["initial"].push_back({{"outcome", o}, {"state", matrix_to_json(rho)}});
    }
    j["instruments"] = json::array();
    for (const auto &[h, instr] : policy.instruments) {
        json branches = json::array();
        for (const auto &[o, branch] : instr.branches) {
            json kraus = json::array();
            for (const auto &k : branch.kraus_ops) {
                kraus.push_back(matrix_to_json(k));
            }
            branches.push_back({{"outcome", o}, {"kraus", std::move(kraus)}});
        }
        j["instruments"].push_back({{"history", h}, {"branches", std::move(branches)}});
    }
    j["povms"] = json::array();
    for (const auto &[h, povm] : policy.final_povms) {
        json elements = json::array();
        for (const auto &[o, e] : povm.elements) {
            elements.push_back({{"outcome", o}, {"matrix", matrix_to_json(e)}});
        }
        j["povms"].push_back({{"history", h}, {"elements", std::move(elements)}});
    }
    return j;
}

SchemePolicy read_policy_file(const std::string &path) {
    json j = read_json_file(path);
    try {
        return policy_from_json(j);
    } catch (const std::exception &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::vector<SchemePolicy> read_policy_list_file(const std::string &path) {
    json j = read_json_file(path);
    std::vector<SchemePolicy> out;
    try {
        if (j.is_array()) {
            for (const auto &entry : j) {
                out.push_back(policy_from_json(entry));
            }
        } else {
            out.push_back(policy_from_json(j));
        }
    } catch (const std::exception &e) {
        throw std::invalid_argument(path + ": scheme " + std::to_string(out.size()) + ": " + e.what());
    }
    return out;
}

void write_policy_file(const std::string &path, const SchemePolicy &policy) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << policy_to_json(policy).dump(2) << "\n";
}

}  // namespace paulilearn
