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

#include "paulilearn/channel.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "paulilearn/limits.h"
#include "paulilearn/symplectic_transform.h"

namespace paulilearn {

namespace {

unsigned checked_qubits(std::size_t length) {
    unsigned n = kernels::qubits_for_length(length);
    if (n > max_channel_qubits()) {
        throw std::invalid_argument("Channel on " + std::to_string(n) + " qubits exceeds the dense cap of " +
                                    std::to_string(max_channel_qubits()) + " (PAULILEARN_MAX_N).");
    }
    return n;
}

void check_eps0(double eps0) {
    if (!(eps0 >= 0.0 && eps0 <= 1.0)) {
        throw std::invalid_argument("eps0 must lie in [0, 1], got " + std::to_string(eps0) + ".");
    }
}

}  // namespace

std::vector<double> eigenvalues_from_error_rates(std::span<const double> error_rates) {
    checked_qubits(error_rates.size());
    std::vector<double> out(error_rates.begin(), error_rates.end());
    kernels::symplectic_transform(out);
    return out;
}

std::vector<double> error_rates_from_eigenvalues(std::span<const double> eigenvalues) {
    checked_qubits(eigenvalues.size());
    std::vector<double> out(eigenvalues.begin(), eigenvalues.end());
    kernels::symplectic_transform(out);
    double scale = 1.0 / static_cast<double>(out.size());
    for (double &v : out) {
        v *= scale;
    }
    return out;
}

PauliChannel PauliChannel::from_error_rates(std::vector<double> error_rates) {
    unsigned n = checked_qubits(error_rates.size());
    auto lambda = std::make_shared<const std::vector<double>>(eigenvalues_from_error_rates(error_rates));
    return PauliChannel(n, std::make_shared<const std::vector<double>>(std::move(error_rates)), std::move(lambda));
}

PauliChannel PauliChannel::from_eigenvalues(std::vector<double> eigenvalues) {
    unsigned n = checked_qubits(eigenvalues.size());
    auto p = std::make_shared<const std::vector<double>>(error_rates_from_eigenvalues(eigenvalues));
    return PauliChannel(n, std::move(p), std::make_shared<const std::vector<double>>(std::move(eigenvalues)));
}

double PauliChannel::error_rate(const PauliString &a) const {
    if (a.num_qubits() != n_) {
        throw std::invalid_argument("Pauli string size does not match channel.");
    }
    return (*error_rates_)[a.index()];
}

double PauliChannel::eigenvalue(const PauliString &b) const {
    if (b.num_qubits() != n_) {
        throw std::invalid_argument("Pauli string size does not match channel.");
    }
    return (*eigenvalues_)[b.index()];
}

std::vector<std::string> ValidityReport::failures() const {
    std::vector<std::string> out;
    if (!trace_preserving) {
        std::ostringstream s;
        s << "trace preservation: lambda_0 = " << eigenvalue_zero << " != 1";
        out.push_back(s.str());
    }
    if (!eigenvalues_in_range) {
        std::ostringstream s;
        s << "eigenvalue range: max |lambda_b| = " << max_abs_eigenvalue << " > 1";
        out.push_back(s.str());
    }
    if (!completely_positive) {
        std::ostringstream s;
        s << "complete positivity: p_" << min_error_rate_index << " = " << min_error_rate << " < 0";
        out.push_back(s.str());
    }
    return out;
}

ValidityReport validate(const PauliChannel &channel, double tol) {
    ValidityReport r;
    auto lambda = channel.eigenvalues();
    auto p = channel.error_rates();
    r.eigenvalue_zero = lambda[0];
    r.trace_preserving = std::abs(lambda[0] - 1.0) <= tol;
    for (double l : lambda) {
        r.max_abs_eigenvalue = std::max(r.max_abs_eigenvalue, std::abs(l));
    }
    r.eigenvalues_in_range = r.max_abs_eigenvalue <= 1.0 + tol;
    auto it = std::min_element(p.begin(), p.end());
    r.min_error_rate = *it;
    r.min_error_rate_index = static_cast<std::uint64_t>(it - p.begin());
    r.completely_positive = r.min_error_rate >= -tol;
    return r;
}

PauliChannel identity_channel(unsigned n) {
    std::vector<double> p(pauli_count(n), 0.0);
    p[0] = 1.0;
    return PauliChannel::from_error_rates(std::move(p));
}

PauliChannel completely_depolarizing_channel(unsigned n) {
    std::vector<double> lambda(pauli_count(n), 0.0);
    lambda[0] = 1.0;
    return PauliChannel::from_eigenvalues(std::move(lambda));
}

PauliChannel random_channel(unsigned n, Rng &rng) {
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> p(pauli_count(n));
    for (double &v : p) {
        v = exp1(rng);
    }
    double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double &v : p) {
        v /= total;
    }
    return PauliChannel::from_error_rates(std::move(p));
}

PauliChannel make_hypothesis_channel(unsigned n, const PauliString &a, Sign sign, double eps0) {
    if (a.num_qubits() != n) {
        throw std::invalid_argument("Hypothesis Pauli has the wrong qubit count.");
    }
    if (a.is_identity()) {
        throw std::invalid_argument("Hypothesis Pauli must not be the identity.");
    }
    check_eps0(eps0);
    std::vector<double> lambda(pauli_count(n), 0.0);
    lambda[0] = 1.0;
    lambda[a.index()] = to_double(sign) * eps0;
    return PauliChannel::from_eigenvalues(std::move(lambda));
}

PauliChannel make_coarse_hypothesis_channel(unsigned n, std::span<const std::uint64_t> block, Sign sign, double eps0) {
    if (block.empty()) {
        throw std::invalid_argument("Coarse hypothesis block must be nonempty.");
    }
    check_eps0(eps0);
    std::vector<double> lambda(pauli_count(n), 0.0);
    lambda[0] = 1.0;
    double value = to_double(sign) * eps0 / static_cast<double>(block.size());
    for (std::uint64_t b : block) {
        if (b == 0) {
            throw std::invalid_argument("Coarse hypothesis block must not contain the identity.");
        }
        if (b >= lambda.size()) {
            throw std::out_of_range("Block index out of range.");
        }
        if (lambda[b] != 0.0) {
            throw std::invalid_argument("Coarse hypothesis block has a repeated index.");
        }
        lambda[b] = value;
    }
    return PauliChannel::from_eigenvalues(std::move(lambda));
}

Partition::Partition(unsigned n, std::vector<std::vector<std::uint64_t>> blocks) : n_(n), blocks_(std::move(blocks)) {
    std::uint64_t count = pauli_count(n);
    std::vector<char> seen(count, 0);
    std::uint64_t covered = 0;
    for (const auto &block : blocks_) {
        if (block.empty()) {
            throw std::invalid_argument("Partition blocks must be nonempty.");
        }
        for (std::uint64_t b : block) {
            if (b == 0) {
                throw std::invalid_argument("Partition blocks must not contain the identity.");
            }
            if (b >= count) {
                throw std::invalid_argument("Partition index " + std::to_string(b) + " out of range.");
            }
            if (seen[b]) {
                throw std::invalid_argument("Partition blocks overlap at index " + std::to_string(b) + ".");
            }
            seen[b] = 1;
            covered++;
        }
    }
    if (covered != count - 1) {
        throw std::invalid_argument("Partition covers " + std::to_string(covered) + " of " +
                                    std::to_string(count - 1) + " non-identity Paulis.");
    }
}

Partition Partition::singletons(unsigned n) {
    std::vector<std::vector<std::uint64_t>> blocks;
    for (std::uint64_t b = 1; b < pauli_count(n); b++) {
        blocks.push_back({b});
    }
    return Partition(n, std::move(blocks));
}

Partition Partition::random(unsigned n, std::size_t max_block_size, Rng &rng) {
    if (max_block_size == 0) {
        throw std::invalid_argument("max_block_size must be positive.");
    }
    std::vector<std::uint64_t> order(pauli_count(n) - 1);
    std::iota(order.begin(), order.end(), std::uint64_t{1});
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_block_size);
    std::vector<std::vector<std::uint64_t>> blocks;
    std::size_t pos = 0;
    while (pos < order.size()) {
        std::size_t len = std::min(size_dist(rng), order.size() - pos);
        blocks.emplace_back(order.begin() + pos, order.begin() + pos + len);
        pos += len;
    }
    return Partition(n, std::move(blocks));
}

std::size_t Partition::max_block_size() const {
    std::size_t c = 0;
    for (const auto &b : blocks_) {
        c = std::max(c, b.size());
    }
    return c;
}

double Partition::block_probability(std::size_t block) const {
    return static_cast<double>(blocks_.at(block).size()) / static_cast<double>(pauli_count(n_) - 1);
}

double signed_geometric_mean(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("Geometric mean of an empty block.");
    }
    double log_sum = 0;
    bool negative = false;
    for (double v : values) {
        if (v == 0.0) {
            return 0.0;
        }
        negative ^= v < 0;
        log_sum += std::log(std::abs(v));
    }
    double magnitude = std::exp(log_sum / static_cast<double>(values.size()));
    return negative ? -magnitude : magnitude;
}

double geometric_mean_fidelity(const PauliChannel &channel, std::span<const std::uint64_t> block) {
    auto lambda = channel.eigenvalues();
    std::vector<double> values;
    values.reserve(block.size());
    for (std::uint64_t b : block) {
        if (b == 0 || b >= lambda.size()) {
            throw std::invalid_argument("Block index must be a non-identity Pauli of the channel.");
        }
        values.push_back(lambda[b]);
    }
    return signed_geometric_mean(values);
}

}  // namespace paulilearn
