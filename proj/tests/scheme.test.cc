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

#include "paulilearn/scheme.h"

#include <cstdlib>

#include "gtest/gtest.h"

#include "oracles.h"
#include "paulilearn/random_scheme.h"

using namespace paulilearn;

TEST(scheme, apply_channel_matches_kraus_sum) {
    Rng rng(11);
    for (unsigned n = 1; n <= 3; n++) {
        auto p = oracles::random_error_rates(n, 40 + n);
        auto channel = PauliChannel::from_error_rates(p);
        Matrix rho = random_density_matrix(Eigen::Index{1} << n, rng);
        Matrix expected = oracles::kraus_apply(p, rho);
        ASSERT_LT(max_abs_diff(apply_channel(channel, rho), expected), 1e-12);
        ASSERT_LT(max_abs_diff(apply_channel_kraus(channel, rho), expected), 1e-12);
    }
}

TEST(scheme, apply_channel_on_non_hermitian_input) {
    auto p = oracles::random_error_rates(2, 3);
    auto channel = PauliChannel::from_error_rates(p);
    Rng rng(4);
    Matrix u = random_unitary(4, rng);
    ASSERT_LT(max_abs_diff(apply_channel(channel, u), oracles::kraus_apply(p, u)), 1e-12);
}

TEST(scheme, repeated_measurement_is_deterministic_under_identity) {
    auto policy = oracles::repeated_measurement_policy("0", 'Z', 3);
    validate_policy(policy);
    ASSERT_EQ(count_leaves(policy), 8u);
    ASSERT_EQ(count_measurements(policy), 3u);
    auto dist = run_scheme_exact(policy, identity_channel(1));
    ASSERT_EQ(dist.size(), 1u);
    ASSERT_NEAR(dist.at(History{0, 0, 0, 0}), 1.0, 1e-12);
}

TEST(scheme, bit_flip_probabilities) {
    // Z measurement of |0> through a channel with p_X = 0.1, p_Y = 0.05.
    auto policy = oracles::repeated_measurement_policy("0", 'Z', 2);
    auto channel = PauliChannel::from_error_rates({0.8, 0.05, 0.1, 0.05});
    auto dist = run_scheme_exact(policy, channel);
    double flip = 0.15;
    ASSERT_NEAR(dist.at(History{0, 0, 0}), (1 - flip) * (1 - flip), 1e-12);
    ASSERT_NEAR(dist.at(History{0, 0, 1}), (1 - flip) * flip, 1e-12);
    ASSERT_NEAR(dist.at(History{0, 1, 0}), flip * flip, 1e-12);
    ASSERT_NEAR(dist.at(History{0, 1, 1}), flip * (1 - flip), 1e-12);
}

TEST(scheme, exact_distribution_normalized) {
    Rng rng(5);
    for (unsigned n = 1; n <= 2; n++) {
        for (unsigned depth = 1; depth <= 3; depth++) {
            auto policy = random_policy(n, depth, rng);
            validate_policy(policy);
            auto channel = random_channel(n, rng);
            auto dist = run_scheme_exact(policy, channel);
            double total = 0;
            for (const auto &[h, p] : dist) {
                ASSERT_EQ(h.size(), depth + 1);
                ASSERT_GE(p, 0.0);
                total += p;
            }
            ASSERT_NEAR(total, 1.0, 1e-10);
        }
    }
}

TEST(scheme, sampled_frequencies_match_exact) {
    auto policy = oracles::repeated_measurement_policy("+", 'Z', 2);
    auto channel = PauliChannel::from_error_rates({0.7, 0.1, 0.1, 0.1});
    auto dist = run_scheme_exact(policy, channel);
    const int shots = 20000;
    std::map<History, int> counts;
    for (int s = 0; s < shots; s++) {
        counts[run_scheme_sampled(policy, channel, derive_seed(99, s))]++;
    }
    for (const auto &[h, p] : dist) {
        double freq = static_cast<double>(counts[h]) / shots;
        ASSERT_NEAR(freq, p, 5 * std::sqrt(p * (1 - p) / shots) + 1e-3);
    }
    ASSERT_EQ(run_scheme_sampled(policy, channel, 7), run_scheme_sampled(policy, channel, 7));
}

TEST(scheme, validation_errors) {
    auto good = oracles::repeated_measurement_policy("0", 'X', 2);
    validate_policy(good);

    auto missing = good;
    missing.final_povms.erase(History{0, 1});
    ASSERT_THROW(validate_policy(missing), std::invalid_argument);

    auto not_complete = good;
    not_complete.instruments[History{0}].branches.erase(1);
    ASSERT_THROW(validate_policy(not_complete), std::invalid_argument);

    auto bad_state = good;
    bad_state.initial_ensemble[0] = Matrix::Identity(2, 2);
    ASSERT_THROW(validate_policy(bad_state), std::invalid_argument);

    auto wrong_dim = good;
    wrong_dim.final_povms[History{0, 0}].elements[0] = Matrix::Identity(4, 4);
    ASSERT_THROW(validate_policy(wrong_dim), std::invalid_argument);

    auto not_psd = good;
    Matrix negative = Matrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    not_psd.final_povms[History{0, 0}].elements[0] = negative;
    not_psd.final_povms[History{0, 0}].elements[1] = Matrix::Identity(2, 2) - negative;
    ASSERT_THROW(validate_policy(not_psd), std::invalid_argument);
}

TEST(scheme, ensemble_weights) {
    SchemePolicy policy;
    policy.n = 1;
    policy.depth = 1;
    policy.initial_ensemble[0] = 0.25 * oracles::qubit_state("0");
    policy.initial_ensemble[1] = 0.75 * oracles::qubit_state("1");
    Povm z;
    z.elements[0] = oracles::qubit_state("0");
    z.elements[1] = oracles::qubit_state("1");
    policy.final_povms[History{0}] = z;
    policy.final_povms[History{1}] = z;
    validate_policy(policy);
    auto dist = run_scheme_exact(policy, identity_channel(1));
    ASSERT_NEAR(dist.at(History{0, 0}), 0.25, 1e-12);
    ASSERT_NEAR(dist.at(History{1, 1}), 0.75, 1e-12);
}

TEST(scheme, trivial_instruments) {
    ASSERT_TRUE(is_trivial_instrument(identity_instrument(2)));
    ASSERT_FALSE(is_trivial_instrument(computational_basis_instrument(1)));
    Rng rng(8);
    ASSERT_TRUE(is_trivial_instrument(random_trivial_instrument(4, 3, rng)));
    ASSERT_FALSE(is_trivial_instrument(random_projective_instrument(2, rng)));

    Povm coin;
    coin.elements[0] = 0.3 * Matrix::Identity(2, 2);
    coin.elements[1] = 0.7 * Matrix::Identity(2, 2);
    ASSERT_TRUE(is_trivial_povm(coin));

    SchemePolicy policy;
    policy.n = 1;
    policy.depth = 3;
    policy.initial_ensemble[0] = oracles::qubit_state("0");
    policy.instruments[History{0}] = random_trivial_instrument(2, 2, rng);
    for (Outcome o : {0u, 1u}) {
        policy.instruments[History{0, o}] = o == 0 ? identity_instrument(1) : computational_basis_instrument(1);
    }
    for (const auto &[h, instr] : policy.instruments) {
        if (h.size() != 2) {
            continue;
        }
        for (const auto &[o, branch] : instr.branches) {
            History c = h;
            c.push_back(o);
            policy.final_povms[c] = coin;
        }
    }
    validate_policy(policy);
    ASSERT_EQ(count_measurements(policy), 1u);
}

TEST(scheme, apply_instrument_prunes_zero_branches) {
    auto out = apply_instrument(computational_basis_instrument(1), oracles::qubit_state("1"));
    ASSERT_EQ(out.size(), 1u);
    ASSERT_EQ(out[0].outcome, 1u);
    ASSERT_NEAR(out[0].probability, 1.0, 1e-15);
}

TEST(scheme, mu_step_matches_dense_update) {
    Rng rng(21);
    const double eps0 = 0.3;
    for (unsigned n = 1; n <= 2; n++) {
        Eigen::Index dim = Eigen::Index{1} << n;
        for (std::uint64_t ai = 1; ai < pauli_count(n); ai++) {
            auto a = PauliString::from_index(n, ai);
            auto id = PauliString::identity(n);
            Matrix pa = to_matrix(a);
            Matrix rho = random_density_matrix(dim, rng);
            auto instr = random_isometry_instrument(dim, 2, 2, rng);
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                auto channel = make_hypothesis_channel(n, a, s, eps0);
                double mu = (pa * rho).trace().real();
                for (const auto &[o, branch] : instr.branches) {
                    Matrix out = apply_branch(branch, apply_channel(channel, rho));
                    double prob = out.trace().real();
                    double expected = (pa * out).trace().real() / prob;
                    double got = mu_recurrence_step(mu, ptm_coefficient(branch, id, id), ptm_coefficient(branch, a, id),
                                                    ptm_coefficient(branch, a, a), ptm_coefficient(branch, id, a), s,
                                                    eps0);
                    ASSERT_NEAR(got, expected, 1e-12);
                }
            }
        }
    }
    ASSERT_THROW(mu_recurrence_step(0, 0, 0, 0, 0, Sign::Plus, 0.1), std::domain_error);
}

TEST(scheme, total_variation_distance) {
    OutcomeDistribution p{{{0}, 0.5}, {{1}, 0.5}};
    OutcomeDistribution q{{{0}, 0.8}, {{2}, 0.2}};
    ASSERT_NEAR(total_variation_distance(p, q), 0.5, 1e-15);
    ASSERT_EQ(total_variation_distance(p, p), 0.0);
}

TEST(scheme, leaf_cap) {
    auto policy = oracles::repeated_measurement_policy("0", 'Z', 4);
    ::setenv("PAULILEARN_MAX_LEAVES", "8", 1);
    EXPECT_THROW(run_scheme_exact(policy, identity_channel(1)), std::length_error);
    ::unsetenv("PAULILEARN_MAX_LEAVES");
    EXPECT_NO_THROW(run_scheme_exact(policy, identity_channel(1)));
}
