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

#include "paulilearn/protocols.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paulilearn/format.h"

namespace paulilearn {

namespace {

void check_p(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1], got " + std::to_string(p));
    }
}

void check_eps_delta(double eps, double delta) {
    if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1)) {
        throw std::invalid_argument("eps and delta must lie in (0, 1)");
    }
}

std::vector<double> clamped_rates(const PauliChannel &channel) {
    std::vector<double> w(channel.error_rates().begin(), channel.error_rates().end());
    for (double &x : w) {
        x = std::max(x, 0.0);
    }
    return w;
}

// A per-qubit depolarizing Pauli on n qubits.
std::uint64_t depolarizing_pauli(unsigned n, double p, Rng &rng) {
    if (p == 0) {
        return 0;
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uint64_t out = 0;
    for (unsigned k = 0; k < n; k++) {
        // Identity with probability 1 - 3p/4, otherwise Z, X or Y each p/4.
        double u = unit(rng);
        std::uint64_t v = u < 1 - 0.75 * p ? 0 : 1 + std::min<std::uint64_t>(2, (u - (1 - 0.75 * p)) / (0.25 * p));
        out = (out << 2) | v;
    }
    return out;
}

}  // namespace

NoiseModel NoiseModel::from_bell_fidelity(double fidelity) {
    return NoiseModel{p_from_fidelity(fidelity)};
}

double NoiseModel::bell_fidelity() const {
    return fidelity_from_p(p_depol);
}

double fidelity_from_p(double p) {
    check_p(p);
    return (1 + 3 * (1 - p) * (1 - p)) / 4;
}

double p_from_fidelity(double fidelity) {
    if (!(fidelity >= 0.25 && fidelity <= 1)) {
        throw std::invalid_argument("Bell fidelity must lie in [1/4, 1], got " + std::to_string(fidelity));
    }
    return 1 - std::sqrt((4 * fidelity - 1) / 3);
}

ErrorSampler::ErrorSampler(const PauliChannel &channel) : n_(channel.num_qubits()) {
    auto w = clamped_rates(channel);
    dist_ = std::discrete_distribution<std::uint64_t>(w.begin(), w.end());
}

std::uint64_t ErrorSampler::operator()(Rng &rng) const {
    return dist_(rng);
}

std::vector<double> bell_outcome_distribution_exact(const PauliChannel &channel, double p) {
    check_p(p);
    unsigned n = channel.num_qubits();
    std::vector<double> lambda(channel.eigenvalues().begin(), channel.eigenvalues().end());
    double q = (1 - p) * (1 - p);
    std::vector<double> damp(n + 1, 1.0);
    for (unsigned w = 1; w <= n; w++) {
        damp[w] = damp[w - 1] * q;
    }
    for (std::uint64_t b = 0; b < lambda.size(); b++) {
        lambda[b] *= damp[index_ops::weight(b)];
    }
    return error_rates_from_eigenvalues(lambda);
}

std::uint64_t bell_sample(const ErrorSampler &errors, double p, Rng &rng) {
    unsigned n = errors.num_qubits();
    std::uint64_t b = errors(rng);
    std::uint64_t d_system = depolarizing_pauli(n, p, rng);
    // The Bell identity moves the ancilla's Pauli onto the system as its
    // transpose, which is the same Pauli modulo phase.
    std::uint64_t d_ancilla = depolarizing_pauli(n, p, rng);
    return b ^ d_system ^ d_ancilla;
}

PauliString bell_sample(const PauliChannel &channel, double p, Rng &rng) {
    check_p(p);
    return PauliString::from_index(channel.num_qubits(), bell_sample(ErrorSampler(channel), p, rng));
}

std::vector<std::uint64_t> bell_samples(const PauliChannel &channel, double p, std::uint64_t shots, Rng &rng) {
    check_p(p);
    ErrorSampler errors(channel);
    std::vector<std::uint64_t> out(shots);
    for (auto &a : out) {
        a = bell_sample(errors, p, rng);
    }
    return out;
}

double ea_estimate(std::span<const std::uint64_t> samples, std::uint64_t b, unsigned n, double p) {
    check_p(p);
    if (samples.empty()) {
        throw std::invalid_argument("ea_estimate needs at least one sample");
    }
    if (n < kMaxIndexQubits && b >= pauli_count(n)) {
        throw std::out_of_range("Pauli index out of range");
    }
    std::int64_t sum = 0;
    for (std::uint64_t a : samples) {
        sum += index_ops::symplectic_product(a, b) ? -1 : 1;
    }
    double scale = std::pow(1 - p, -2.0 * index_ops::weight(b));
    return scale * static_cast<double>(sum) / static_cast<double>(samples.size());
}

double ea_estimate(std::span<const std::uint64_t> samples, const PauliString &b, double p) {
    return ea_estimate(samples, b.index(), b.num_qubits(), p);
}

std::uint64_t ea_sample_count(double eps, double delta, unsigned weight, double p) {
    check_eps_delta(eps, delta);
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("ea_sample_count needs p in [0, 1)");
    }
    double n = 2 / (eps * eps) * std::pow(1 - p, -4.0 * weight) * std::log(2 / delta);
    if (!(n < 1.8e19)) {
        throw std::overflow_error("sample count does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(std::ceil(n));
}

double af_estimate_eigenvalue(const PauliChannel &channel, const PauliString &a, std::uint64_t shots, Rng &rng) {
    if (a.num_qubits() != channel.num_qubits()) {
        throw std::invalid_argument("Pauli string size does not match channel");
    }
    if (a.is_identity()) {
        throw std::invalid_argument("af_estimate_eigenvalue needs a non-identity Pauli");
    }
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    ErrorSampler errors(channel);
    std::int64_t sum = 0;
    for (std::uint64_t s = 0; s < shots; s++) {
        sum += index_ops::symplectic_product(a.index(), errors(rng)) ? -1 : 1;
    }
    return static_cast<double>(sum) / static_cast<double>(shots);
}

std::uint64_t af_group_shots(double eps, double delta) {
    check_eps_delta(eps, delta);
    return static_cast<std::uint64_t>(std::ceil(2 / (eps * eps) * std::log(2 / delta)));
}

AfEstimates af_estimate_all(const PauliChannel &channel, std::uint64_t shots_per_group,
                            const std::vector<CommutingGroup> &cover, Rng &rng) {
    unsigned n = channel.num_qubits();
    validate_cover(n, cover);
    if (shots_per_group == 0) {
        throw std::invalid_argument("shots per group must be positive");
    }
    std::uint64_t count = pauli_count(n);
    std::vector<std::int64_t> sums(count, 0);
    AfEstimates out;
    out.shots_per_pauli.assign(count, 0);
    ErrorSampler errors(channel);
    for (const auto &group : cover) {
        for (std::uint64_t s = 0; s < shots_per_group; s++) {
            std::uint64_t b = errors(rng);
            for (std::uint64_t g : group.elements) {
                sums[g] += index_ops::symplectic_product(b, g) ? -1 : 1;
            }
        }
        for (std::uint64_t g : group.elements) {
            out.shots_per_pauli[g] += shots_per_group;
        }
        out.total_shots += shots_per_group;
    }
    out.estimates.assign(count, 0.0);
    out.estimates[0] = 1;
    out.shots_per_pauli[0] = out.total_shots;
    for (std::uint64_t a = 1; a < count; a++) {
        out.estimates[a] = static_cast<double>(sums[a]) / static_cast<double>(out.shots_per_pauli[a]);
    }
    return out;
}

AfEstimates af_estimate_all(const PauliChannel &channel, double eps, double delta,
                            const std::vector<CommutingGroup> &cover, Rng &rng) {
    return af_estimate_all(channel, af_group_shots(eps, delta), cover, rng);
}

std::vector<CommutingGroup> default_cover(unsigned n) {
    return commuting_cover(n, n <= 4 ? CoverStrategy::Greedy : CoverStrategy::Product);
}

std::vector<double> coarse_estimate(const PauliChannel &channel, const Partition &partition,
                                    std::uint64_t shots_per_group, const std::vector<CommutingGroup> &cover, Rng &rng) {
    if (partition.num_qubits() != channel.num_qubits()) {
        throw std::invalid_argument("partition and channel act on different qubit counts");
    }
    AfEstimates est = af_estimate_all(channel, shots_per_group, cover, rng);
    std::vector<double> out;
    for (const auto &block : partition.blocks()) {
        std::vector<double> values;
        for (std::uint64_t a : block) {
            values.push_back(std::clamp(est.estimates[a], -1.0, 1.0));
        }
        out.push_back(signed_geometric_mean(values));
    }
    return out;
}

std::vector<double> coarse_estimate(const PauliChannel &channel, const Partition &partition,
                                    std::uint64_t shots_per_group, Rng &rng) {
    return coarse_estimate(channel, partition, shots_per_group, default_cover(channel.num_qubits()), rng);
}

double EstimateRecord::error() const {
    return std::abs(estimate - truth);
}

const char *EstimateRecord::csv_header() {
    return "protocol,n,target,shots,estimate,truth,error,seed";
}

std::string EstimateRecord::csv_row() const {
    return protocol + "," + std::to_string(n) + "," + target + "," + std::to_string(shots) + "," +
           format_double(estimate) + "," + format_double(truth) + "," + format_double(error()) + "," +
           std::to_string(seed);
}

}  // namespace paulilearn
