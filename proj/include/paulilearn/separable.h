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

#ifndef PAULILEARN_SEPARABLE_H
#define PAULILEARN_SEPARABLE_H

#include <cstdint>
#include <map>
#include <vector>

#include "paulilearn/scheme.h"

namespace paulilearn {

/// sigma (ancilla) tensor gamma (system), both positive.
struct ProductTerm {
    Matrix ancilla;
    Matrix system;
};

/// A tensor B for CP maps given by Kraus lists on each factor.
struct ProductMap {
    std::vector<Matrix> ancilla_kraus;
    std::vector<Matrix> system_kraus;
};

/// A learning scheme whose ancilla never becomes entangled with the system:
/// every state, processing channel and POVM element is an explicit sum of
/// product terms.
///
/// The run is: start in sum_j sigma_j (x) gamma_j; for t = 1..depth apply
/// id (x) Lambda and, for t < depth, the channel sum_j A_{t,j} (x) B_{t,j}
/// (channels[t-1]); finally measure {sum_j M_{k,j} (x) N_{k,j}}_k.
struct SeparableScheme {
    unsigned n = 1;
    unsigned ancilla_dim = 1;
    unsigned depth = 1;
    std::vector<ProductTerm> initial_state;
    std::vector<std::vector<ProductMap>> channels;
    std::map<Outcome, std::vector<ProductTerm>> povm;
};

/// Throws std::invalid_argument unless shapes match, factors are positive,
/// the initial state has unit trace, each channel is trace preserving, and
/// the POVM sums to the identity.
void validate_separable(const SeparableScheme &scheme, double tol = kSchemeTolerance);

/// Exact Pr[k | Lambda] by dense simulation on ancilla (x) system.
std::map<Outcome, double> run_separable_exact(const SeparableScheme &scheme, const PauliChannel &channel);

struct CompiledPolicy {
    SchemePolicy policy;
    /// Final-POVM label of the policy -> outcome k of the separable scheme.
    std::map<Outcome, Outcome> final_outcome_to_k;
};

/// Equivalent classical-memory-assisted scheme. The classical record o_t is
/// the index j_t of the product term taken at step t; the final label packs
/// (k, j). Branches of zero weight are dropped.
CompiledPolicy compile_separable_to_cma(const SeparableScheme &scheme, double tol = kSchemeTolerance);

/// Pr[k] obtained by summing a compiled policy's history distribution.
std::map<Outcome, double> marginalize_final(const OutcomeDistribution &dist,
                                            const std::map<Outcome, Outcome> &final_outcome_to_k);

struct CompiledSeparable {
    SeparableScheme scheme;
    /// Alphabet of o_t, t = 0..depth, in register order.
    std::vector<std::vector<Outcome>> alphabets;

    std::vector<std::size_t> radices() const;
    /// Mixed-radix label of a full history, and back.
    Outcome encode(const History &history) const;
    History decode(Outcome label) const;
};

/// Equivalent separable scheme whose ancilla stores o_0..o_{depth-1} in
/// registers of the alphabet sizes. Its outcome label encodes the full
/// history. Histories without a table entry get the identity instrument
/// and the trivial POVM; they are never reached.
CompiledSeparable compile_cma_to_separable(const SchemePolicy &policy);

}  // namespace paulilearn

#endif
