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

#ifndef PAULILEARN_PROTOCOLS_H
#define PAULILEARN_PROTOCOLS_H

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "paulilearn/channel.h"
#include "paulilearn/cover.h"
#include "paulilearn/seeding.h"

namespace paulilearn {

/// Single-qubit depolarizing noise of strength p on each of the 2n qubits
/// of the Bell-pair preparation.
struct NoiseModel {
    double p_depol = 0;

    static NoiseModel from_bell_fidelity(double fidelity);
    double bell_fidelity() const;
};

/// F = (1 + 3(1-p)^2) / 4.
double fidelity_from_p(double p);
/// p = 1 - sqrt((4F - 1) / 3).
double p_from_fidelity(double fidelity);

/// Draws Pauli errors b with probability p_b. Tiny negative rates from
/// round-off are treated as 0.
class ErrorSampler {
   public:
    explicit ErrorSampler(const PauliChannel &channel);
    std::uint64_t operator()(Rng &rng) const;
    unsigned num_qubits() const {
        return n_;
    }

   private:
    unsigned n_;
    mutable std::discrete_distribution<std::uint64_t> dist_;
};

/// p~(a) = 4^{-n} sum_b (-1)^{<a,b>} (1-p)^{2|b|} lambda_b.
std::vector<double> bell_outcome_distribution_exact(const PauliChannel &channel, double p);

/// One Bell-sampling outcome a = b + d_system + d_ancilla (canonical index).
std::uint64_t bell_sample(const ErrorSampler &errors, double p, Rng &rng);
PauliString bell_sample(const PauliChannel &channel, double p, Rng &rng);
std::vector<std::uint64_t> bell_samples(const PauliChannel &channel, double p, std::uint64_t shots, Rng &rng);

/// Mean of (1-p)^{-2|b|} (-1)^{<a,b>} over the samples.
double ea_estimate(std::span<const std::uint64_t> samples, std::uint64_t b, unsigned n, double p);
double ea_estimate(std::span<const std::uint64_t> samples, const PauliString &b, double p);

/// ceil(2 eps^-2 (1-p)^{-4|b|} ln(2/delta)).
std::uint64_t ea_sample_count(double eps, double delta, unsigned weight, double p);

/// Prepares a +1 eigenstate of P_a, applies the channel once per shot and
/// averages the recorded sign (-1)^{<a,b>}.
double af_estimate_eigenvalue(const PauliChannel &channel, const PauliString &a, std::uint64_t shots, Rng &rng);

/// ceil(2 eps^-2 ln(2/delta)).
std::uint64_t af_group_shots(double eps, double delta);

struct AfEstimates {
    /// Indexed by canonical Pauli index; entry 0 is exactly 1.
    std::vector<double> estimates;
    /// Shots that contributed to each estimate.
    std::vector<std::uint64_t> shots_per_pauli;
    std::uint64_t total_shots = 0;
};

/// Measures every group of the cover simultaneously for `shots_per_group`
/// shots. A shot with error b flips the sign of element g iff <b,g> = 1.
/// Estimates of a Pauli in several groups pool all of their shots.
AfEstimates af_estimate_all(const PauliChannel &channel, std::uint64_t shots_per_group,
                            const std::vector<CommutingGroup> &cover, Rng &rng);
AfEstimates af_estimate_all(const PauliChannel &channel, double eps, double delta,
                            const std::vector<CommutingGroup> &cover, Rng &rng);

/// Greedy cover for n <= 4, product cover above.
std::vector<CommutingGroup> default_cover(unsigned n);

/// Per-block signed geometric means of the ancilla-free estimates, each
/// clipped to [-1, 1] first.
std::vector<double> coarse_estimate(const PauliChannel &channel, const Partition &partition,
                                    std::uint64_t shots_per_group, Rng &rng);
std::vector<double> coarse_estimate(const PauliChannel &channel, const Partition &partition,
                                    std::uint64_t shots_per_group, const std::vector<CommutingGroup> &cover, Rng &rng);

struct EstimateRecord {
    std::string protocol;
    unsigned n = 0;
    std::string target;
    std::uint64_t shots = 0;
    double estimate = 0;
    double truth = 0;
    std::uint64_t seed = 0;

    double error() const;
    static const char *csv_header();
    std::string csv_row() const;
};

}  // namespace paulilearn

#endif
