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

#include "paulilearn/separable.h"

#include "gtest/gtest.h"

#include "oracles.h"
#include "paulilearn/random_scheme.h"

using namespace paulilearn;

namespace {

double max_difference(const std::map<Outcome, double> &a, const std::map<Outcome, double> &b) {
    double worst = 0;
    for (const auto &[k, v] : a) {
        auto it = b.find(k);
        worst = std::max(worst, std::abs(v - (it == b.end() ? 0.0 : it->second)));
    }
    for (const auto &[k, v] : b) {
        if (!a.contains(k)) {
            worst = std::max(worst, std::abs(v));
        }
    }
    return worst;
}

}  // namespace

TEST(separable, trivial_ancilla_scheme) {
    // Prepare |0>, measure Z; the ancilla is a one-dimensional spectator.
    SeparableScheme s;
    s.n = 1;
    s.ancilla_dim = 1;
    s.depth = 1;
    s.initial_state.push_back({Matrix::Identity(1, 1), oracles::qubit_state("0")});
    s.povm[0].push_back({Matrix::Identity(1, 1), oracles::qubit_state("0")});
    s.povm[1].push_back({Matrix::Identity(1, 1), oracles::qubit_state("1")});
    validate_separable(s);
    auto dist = run_separable_exact(s, PauliChannel::from_error_rates({0.9, 0.0, 0.1, 0.0}));
    ASSERT_NEAR(dist.at(0), 0.9, 1e-12);
    ASSERT_NEAR(dist.at(1), 0.1, 1e-12);
}

TEST(separable, validation_errors) {
    SeparableScheme s;
    s.n = 1;
    s.ancilla_dim = 1;
    s.depth = 1;
    s.initial_state.push_back({Matrix::Identity(1, 1), oracles::qubit_state("0")});
    s.povm[0].push_back({Matrix::Identity(1, 1), oracles::qubit_state("0")});
    ASSERT_THROW(validate_separable(s), std::invalid_argument);
    s.povm[1].push_back({Matrix::Identity(1, 1), oracles::qubit_state("1")});
    validate_separable(s);
    s.depth = 2;
    ASSERT_THROW(validate_separable(s), std::invalid_argument);
}

TEST(separable, compiled_cma_reproduces_distribution) {
    Rng rng(31);
    for (unsigned depth = 1; depth <= 3; depth++) {
        for (unsigned dim : {1u, 2u}) {
            for (int trial = 0; trial < 4; trial++) {
                auto scheme = random_separable_scheme(dim, depth, rng);
                validate_separable(scheme);
                auto compiled = compile_separable_to_cma(scheme);
                validate_policy(compiled.policy);
                for (int c = 0; c < 3; c++) {
                    auto channel = random_channel(1, rng);
                    auto direct = run_separable_exact(scheme, channel);
                    auto via = marginalize_final(run_scheme_exact(compiled.policy, channel),
                                                 compiled.final_outcome_to_k);
                    ASSERT_LT(max_difference(direct, via), 1e-9);
                }
            }
        }
    }
}

TEST(separable, compiled_separable_reproduces_distribution) {
    Rng rng(32);
    for (unsigned n = 1; n <= 2; n++) {
        for (unsigned depth = 1; depth <= 3; depth++) {
            if (n == 2 && depth == 3) {
                continue;
            }
            RandomPolicyOptions opts;
            opts.max_outcomes = 2;
            auto policy = random_policy(n, depth, rng, opts);
            auto compiled = compile_cma_to_separable(policy);
            validate_separable(compiled.scheme);
            auto channel = random_channel(n, rng);
            auto direct = run_scheme_exact(policy, channel);
            auto via = run_separable_exact(compiled.scheme, channel);
            std::map<Outcome, double> encoded;
            for (const auto &[h, p] : direct) {
                encoded[compiled.encode(h)] += p;
                ASSERT_EQ(compiled.decode(compiled.encode(h)), h);
            }
            ASSERT_LT(max_difference(encoded, via), 1e-9);
        }
    }
}

TEST(separable, round_trip_through_both_compilers) {
    Rng rng(33);
    auto policy = random_policy(1, 2, rng);
    auto sep = compile_cma_to_separable(policy);
    auto back = compile_separable_to_cma(sep.scheme);
    auto channel = random_channel(1, rng);
    auto direct = run_scheme_exact(policy, channel);
    std::map<Outcome, double> encoded;
    for (const auto &[h, p] : direct) {
        encoded[sep.encode(h)] += p;
    }
    auto via = marginalize_final(run_scheme_exact(back.policy, channel), back.final_outcome_to_k);
    ASSERT_LT(max_difference(encoded, via), 1e-9);
}
