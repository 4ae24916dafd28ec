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

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"

#include "oracles.h"

using namespace paulilearn;

TEST(protocols, fidelity_conversion) {
    ASSERT_DOUBLE_EQ(fidelity_from_p(0), 1.0);
    ASSERT_NEAR(fidelity_from_p(1), 0.25, 1e-15);
    for (double f : {1.0, 0.95, 0.9, 0.6}) {
        ASSERT_NEAR(fidelity_from_p(p_from_fidelity(f)), f, 1e-14);
        ASSERT_NEAR(NoiseModel::from_bell_fidelity(f).bell_fidelity(), f, 1e-14);
    }
    ASSERT_THROW(p_from_fidelity(0.2), std::invalid_argument);
}

TEST(protocols, bell_distribution_matches_convolution) {
    for (unsigned n = 1; n <= 3; n++) {
        auto p = oracles::random_error_rates(n, 60 + n);
        auto channel = PauliChannel::from_error_rates(p);
        for (double noise : {0.0, 0.05, 0.1}) {
            auto exact = bell_outcome_distribution_exact(channel, noise);
            auto expected = oracles::bell_distribution_by_convolution(p, noise);
            for (std::size_t a = 0; a < p.size(); a++) {
                ASSERT_NEAR(exact[a], expected[a], 1e-13);
            }
        }
    }
}

TEST(protocols, ea_estimator_unbiased) {
    for (unsigned n = 1; n <= 3; n++) {
        auto channel = PauliChannel::from_error_rates(oracles::random_error_rates(n, 70 + n));
        for (double noise : {0.0, 0.05, 0.1}) {
            auto dist = bell_outcome_distribution_exact(channel, noise);
            for (std::uint64_t b = 0; b < pauli_count(n); b++) {
                double mean = 0;
                for (std::uint64_t a = 0; a < dist.size(); a++) {
                    double sign = oracles::anticommutes(oracles::index_letters(n, a), oracles::index_letters(n, b)) ? -1 : 1;
                    mean += dist[a] * sign * std::pow(1 - noise, -2.0 * index_ops::weight(b));
                }
                ASSERT_NEAR(mean, channel.eigenvalues()[b], 1e-12);
            }
        }
    }
}

TEST(protocols, bell_sampling_frequencies) {
    auto p = oracles::random_error_rates(1, 9);
    auto channel = PauliChannel::from_error_rates(p);
    Rng rng(12);
    const std::uint64_t shots = 40000;
    auto samples = bell_samples(channel, 0.1, shots, rng);
    auto dist = bell_outcome_distribution_exact(channel, 0.1);
    for (std::uint64_t a = 0; a < 4; a++) {
        double freq = static_cast<double>(std::count(samples.begin(), samples.end(), a)) / shots;
        ASSERT_NEAR(freq, dist[a], 5 * std::sqrt(dist[a] * (1 - dist[a]) / shots) + 1e-4);
    }
}

TEST(protocols, sample_counts) {
    ASSERT_EQ(ea_sample_count(0.1, 1.0 / 3, 0, 0), 359u);
    ASSERT_EQ(ea_sample_count(0.1, 1.0 / 3, 5, 0), 359u);
    ASSERT_EQ(af_group_shots(0.1, 1.0 / 3), 359u);
    ASSERT_EQ(ea_sample_count(0.1, 1.0 / 3, 1, 0.1), static_cast<std::uint64_t>(std::ceil(200 * std::log(6.0) / std::pow(0.9, 4))));
    ASSERT_THROW(ea_sample_count(0, 0.1, 1, 0), std::invalid_argument);
}

TEST(protocols, ea_estimate_accuracy) {
    auto channel = PauliChannel::from_error_rates(oracles::random_error_rates(2, 5));
    Rng rng(6);
    auto samples = bell_samples(channel, 0.0, 20000, rng);
    for (std::uint64_t b = 0; b < 16; b++) {
        ASSERT_NEAR(ea_estimate(samples, b, 2, 0.0), channel.eigenvalues()[b], 0.05);
    }
    ASSERT_EQ(ea_estimate(samples, PauliString::identity(2), 0.0), 1.0);
}

TEST(protocols, af_single_estimate) {
    auto channel = PauliChannel::from_error_rates({0.7, 0.1, 0.15, 0.05});
    Rng rng(7);
    auto x = PauliString::from_letters("X");
    ASSERT_NEAR(af_estimate_eigenvalue(channel, x, 40000, rng), channel.eigenvalue(x), 0.02);
}

TEST(protocols, af_estimate_all_budget) {
    for (unsigned n = 1; n <= 3; n++) {
        auto cover = default_cover(n);
        ASSERT_EQ(cover.size(), (1u << n) + 1);
        auto channel = PauliChannel::from_error_rates(oracles::random_error_rates(n, 80 + n));
        Rng rng(n);
        auto est = af_estimate_all(channel, 0.1, 1.0 / 3, cover, rng);
        ASSERT_EQ(est.total_shots, cover.size() * 359u);
        ASSERT_EQ(est.estimates[0], 1.0);
        for (std::uint64_t a = 1; a < pauli_count(n); a++) {
            ASSERT_EQ(est.shots_per_pauli[a], 359u);
            ASSERT_LE(std::abs(est.estimates[a]), 1.0);
        }
    }
}

TEST(protocols, af_pools_overlapping_groups) {
    auto cover = commuting_cover(2, CoverStrategy::Product);
    auto channel = identity_channel(2);
    Rng rng(1);
    auto est = af_estimate_all(channel, 10, cover, rng);
    ASSERT_EQ(est.total_shots, 90u);
    ASSERT_EQ(est.shots_per_pauli[PauliString::from_letters("XI").index()], 30u);
    ASSERT_EQ(est.shots_per_pauli[PauliString::from_letters("XZ").index()], 10u);
    for (std::uint64_t a = 0; a < 16; a++) {
        ASSERT_EQ(est.estimates[a], 1.0);
    }
}

TEST(protocols, coarse_estimate_on_identity) {
    auto partition = Partition::singletons(1);
    Rng rng(2);
    auto est = coarse_estimate(identity_channel(1), partition, 50, rng);
    ASSERT_EQ(est.size(), 3u);
    for (double v : est) {
        ASSERT_EQ(v, 1.0);
    }
    Partition blocks(1, {{1, 2}, {3}});
    auto channel = PauliChannel::from_eigenvalues({1, 0.8, 0.45, 0.3});
    auto coarse = coarse_estimate(channel, blocks, 40000, rng);
    ASSERT_NEAR(coarse[0], 0.6, 0.02);
    ASSERT_NEAR(coarse[1], 0.3, 0.02);
}

TEST(protocols, estimate_record_csv) {
    EstimateRecord r{"ea", 2, "XZ", 359, 0.75, 0.8, 3};
    ASSERT_NEAR(r.error(), 0.05, 1e-15);
    ASSERT_STREQ(EstimateRecord::csv_header(), "protocol,n,target,shots,estimate,truth,error,seed");
    auto row = r.csv_row();
    ASSERT_EQ(row.substr(0, 13), "ea,2,XZ,359,0");
}
