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

#ifndef PAULILEARN_CHANNEL_H
#define PAULILEARN_CHANNEL_H

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "paulilearn/pauli_string.h"
#include "paulilearn/seeding.h"

namespace paulilearn {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Sign : int { Minus = -1, Plus = 1 };

inline double to_double(Sign s) {
    return static_cast<double>(static_cast<int>(s));
}

/// lambda_b = sum_a p_a (-1)^{<a,b>}.
std::vector<double> eigenvalues_from_error_rates(std::span<const double> error_rates);

/// p_a = 4^{-n} sum_b lambda_b (-1)^{<a,b>}.
std::vector<double> error_rates_from_eigenvalues(std::span<const double> eigenvalues);

/// An n-qubit Pauli channel holding both its error rates and its eigenvalues.
///
/// Both arrays are filled at construction and never change afterwards, so
/// copies share storage and concurrent reads need no locking. Construction
/// does not reject non-physical inputs; call `validate`.
class PauliChannel {
   public:
    static PauliChannel from_error_rates(std::vector<double> error_rates);
    static PauliChannel from_eigenvalues(std::vector<double> eigenvalues);

    unsigned num_qubits() const {
        return n_;
    }
    std::span<const double> error_rates() const {
        return *error_rates_;
    }
    std::span<const double> eigenvalues() const {
        return *eigenvalues_;
    }
    double error_rate(const PauliString &a) const;
    double eigenvalue(const PauliString &b) const;

   private:
    PauliChannel(unsigned n, std::shared_ptr<const std::vector<double>> p, std::shared_ptr<const std::vector<double>> l)
        : n_(n), error_rates_(std::move(p)), eigenvalues_(std::move(l)) {
    }

    unsigned n_;
    std::shared_ptr<const std::vector<double>> error_rates_;
    std::shared_ptr<const std::vector<double>> eigenvalues_;
};

struct ValidityReport {
    bool trace_preserving = true;
    bool eigenvalues_in_range = true;
    bool completely_positive = true;
    double eigenvalue_zero = 1;
    double max_abs_eigenvalue = 0;
    double min_error_rate = 0;
    std::uint64_t min_error_rate_index = 0;

    bool valid() const {
        return trace_preserving && eigenvalues_in_range && completely_positive;
    }
    /// Human-readable list of failed constraints; empty when valid.
    std::vector<std::string> failures() const;
};

/// Checks lambda_0 = 1, |lambda_b| <= 1 and p_a >= 0, each up to `tol`.
ValidityReport validate(const PauliChannel &channel, double tol = kDefaultTolerance);

PauliChannel identity_channel(unsigned n);
PauliChannel completely_depolarizing_channel(unsigned n);

/// Error rates drawn uniformly from the probability simplex.
PauliChannel random_channel(unsigned n, Rng &rng);

/// Eigenvalues 1 on the identity, sign*eps0 on `a`, 0 elsewhere.
PauliChannel make_hypothesis_channel(unsigned n, const PauliString &a, Sign sign, double eps0);

/// Eigenvalues 1 on the identity, sign*eps0/|B| on every index in `block`,
/// 0 elsewhere.
PauliChannel make_coarse_hypothesis_channel(unsigned n, std::span<const std::uint64_t> block, Sign sign, double eps0);

/// A partition of the 4^n - 1 non-identity Pauli indices into blocks.
class Partition {
   public:
    /// Throws std::invalid_argument unless the blocks are nonempty, disjoint,
    /// free of the identity, and cover every non-identity index.
    Partition(unsigned n, std::vector<std::vector<std::uint64_t>> blocks);

    static Partition singletons(unsigned n);
    /// Shuffles the non-identity indices and cuts them into blocks whose sizes
    /// are drawn uniformly from [1, max_block_size].
    static Partition random(unsigned n, std::size_t max_block_size, Rng &rng);

    unsigned num_qubits() const {
        return n_;
    }
    const std::vector<std::vector<std::uint64_t>> &blocks() const {
        return blocks_;
    }
    /// C = max_i |B_i|.
    std::size_t max_block_size() const;
    /// pi(B) = |B| / (4^n - 1).
    double block_probability(std::size_t block) const;

   private:
    unsigned n_;
    std::vector<std::vector<std::uint64_t>> blocks_;
};

/// sgn(prod lambda_b) |prod lambda_b|^{1/|B|}; 0 when any factor is 0.
double geometric_mean_fidelity(const PauliChannel &channel, std::span<const std::uint64_t> block);

/// The same combination rule applied to an arbitrary list of values.
double signed_geometric_mean(std::span<const double> values);

}  // namespace paulilearn

#endif
