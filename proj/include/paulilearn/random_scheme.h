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

#ifndef PAULILEARN_RANDOM_SCHEME_H
#define PAULILEARN_RANDOM_SCHEME_H

#include "paulilearn/scheme.h"
#include "paulilearn/seeding.h"
#include "paulilearn/separable.h"

namespace paulilearn {

/// Haar-random unitary (QR of a complex Gaussian matrix, phases fixed).
Matrix random_unitary(Eigen::Index dim, Rng &rng);

/// Ginibre-ensemble density matrix of full rank.
Matrix random_density_matrix(Eigen::Index dim, Rng &rng);

/// Kraus ops K_{o,r} cut from a Haar isometry: `outcomes` branches with
/// `rank` Kraus ops each.
Instrument random_isometry_instrument(Eigen::Index dim, unsigned outcomes, unsigned rank, Rng &rng);

/// Non-destructive measurement in a Haar-random orthonormal basis.
Instrument random_projective_instrument(Eigen::Index dim, Rng &rng);

/// A random mixture of unitaries, each unitary recorded as an outcome;
/// every branch is proportional to a unitary channel.
Instrument random_trivial_instrument(Eigen::Index dim, unsigned outcomes, Rng &rng);

/// POVM elements of a random isometry instrument.
Povm random_povm(Eigen::Index dim, unsigned outcomes, Rng &rng);

struct RandomPolicyOptions {
    unsigned max_outcomes = 3;
    unsigned max_rank = 2;
    unsigned max_initial_states = 2;
    /// Probability that a given node uses a trivial instrument.
    double trivial_probability = 0.25;
};

/// Random explicit policy on n qubits with the given depth. Each reachable
/// history gets an independently drawn instrument; the final POVM is random.
SchemePolicy random_policy(unsigned n, unsigned depth, Rng &rng, const RandomPolicyOptions &options = {});

/// Random separable scheme on one system qubit. Processing channels pair an
/// ancilla instrument with system channels, or a system instrument with
/// ancilla channels; the POVM conditions one side on the other's outcome.
SeparableScheme random_separable_scheme(unsigned ancilla_dim, unsigned depth, Rng &rng);

}  // namespace paulilearn

#endif
