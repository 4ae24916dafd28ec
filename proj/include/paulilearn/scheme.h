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

#ifndef PAULILEARN_SCHEME_H
#define PAULILEARN_SCHEME_H

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "paulilearn/channel.h"
#include "paulilearn/dense.h"

namespace paulilearn {

using Outcome = std::uint32_t;
/// Classical outcome record o_0, o_1, ..., in order.
using History = std::vector<Outcome>;
using OutcomeDistribution = std::map<History, double>;

inline constexpr double kSchemeTolerance = 1e-9;
/// Branches whose probability falls below this are dropped, not renormalized.
inline constexpr double kPruneThreshold = 1e-14;

/// One outcome of an instrument: the CP trace non-increasing map
/// rho -> sum_j K_j rho K_j^dagger.
struct KrausBranch {
    std::vector<Matrix> kraus_ops;
};

struct Instrument {
    std::map<Outcome, KrausBranch> branches;
};

struct Povm {
    std::map<Outcome, Matrix> elements;
};

/// A classical-memory-assisted scheme with `depth` channel uses, as an
/// explicit finite tree.
///
/// The run is: pick o_0 with weight Tr(rho_{o_0}) and start from the
/// normalized rho_{o_0}; then for t = 1..depth apply the channel and, for
/// t < depth, the instrument keyed by (o_0..o_{t-1}) which records o_t. The
/// final POVM is keyed by (o_0..o_{depth-1}) and records o_depth. Tables only
/// need entries for histories that are reachable.
struct SchemePolicy {
    unsigned n = 1;
    unsigned depth = 1;
    std::map<Outcome, Matrix> initial_ensemble;
    std::map<History, Instrument> instruments;
    std::map<History, Povm> final_povms;
};

/// Throws std::invalid_argument describing the first problem found on a
/// reachable history: missing tables, wrong dimensions, a non-PSD state or
/// POVM element, an instrument or POVM that does not sum to the identity.
void validate_policy(const SchemePolicy &policy, double tol = kSchemeTolerance);

/// Throws unless sum_o E_o = I within `tol` and dimensions match `n`.
void validate_instrument(const Instrument &instrument, unsigned n, double tol = kSchemeTolerance);

/// Lambda(rho) using Pauli coefficients: Tr(P_b rho) is scaled by lambda_b.
Matrix apply_channel(const PauliChannel &channel, const Matrix &rho);

/// Lambda(rho) = sum_a p_a P_a rho P_a, evaluated literally.
Matrix apply_channel_kraus(const PauliChannel &channel, const Matrix &rho);

/// Unnormalized branch output sum_j K_j rho K_j^dagger.
Matrix apply_branch(const KrausBranch &branch, const Matrix &rho);

/// E = sum_j K_j^dagger K_j, so that Tr(E rho) = Tr(branch(rho)).
Matrix povm_element_of(const KrausBranch &branch);

struct InstrumentOutcome {
    Outcome outcome;
    double probability;
    Matrix state;
};

/// Outcome probabilities and normalized post-measurement states. Branches
/// with probability below kPruneThreshold are omitted.
std::vector<InstrumentOutcome> apply_instrument(const Instrument &instrument, const Matrix &rho);

/// True iff every branch's POVM element is within `tol` (max norm) of
/// (Tr E / 2^n) I, i.e. every branch is proportional to a CPTP map.
bool is_trivial_instrument(const Instrument &instrument, double tol = kSchemeTolerance);
bool is_trivial_povm(const Povm &povm, double tol = kSchemeTolerance);

/// Worst-case number of non-trivial instruments along a path of the tree,
/// counting the final POVM when it is non-trivial.
unsigned count_measurements(const SchemePolicy &policy, double tol = kSchemeTolerance);

/// Number of structurally reachable complete histories.
std::size_t count_leaves(const SchemePolicy &policy);

/// Exact Pr[o | Lambda] over complete histories (o_0..o_depth). Refuses with
/// std::length_error when the tree exceeds max_enumeration_leaves().
OutcomeDistribution run_scheme_exact(const SchemePolicy &policy, const PauliChannel &channel);

/// One history drawn from Pr[o | Lambda]; deterministic in `seed`.
History run_scheme_sampled(const SchemePolicy &policy, const PauliChannel &channel, std::uint64_t seed);

/// Visits every reachable prefix (o_0..o_{t-1}), t = 1..depth, with its
/// probability and the normalized state about to enter channel use t.
using StateVisitor = std::function<void(const History &, double probability, const Matrix &state)>;
void for_each_channel_input(const SchemePolicy &policy, const PauliChannel &channel, const StateVisitor &visit);

/// c_{a,b} = Tr[P_a C(P_b)] / 2^n for the branch C.
double ptm_coefficient(const KrausBranch &branch, const PauliString &a, const PauliString &b);

/// Next expectation Tr(P_a rho') of the conditional state after
/// Lambda_{a,sign} and a branch with PTM entries c:
///     (c_a0 + s eps0 mu c_aa) / (c_00 + s eps0 mu c_0a).
/// Throws std::domain_error on a zero denominator (a zero-probability branch).
double mu_recurrence_step(double mu, double c00, double ca0, double caa, double c0a, Sign sign, double eps0);

double total_variation_distance(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// Trivial single-outcome instrument that leaves the state alone.
Instrument identity_instrument(unsigned n);

/// Projective measurement onto the computational basis, non-destructive.
Instrument computational_basis_instrument(unsigned n);

}  // namespace paulilearn

#endif
