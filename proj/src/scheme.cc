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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "paulilearn/limits.h"

namespace paulilearn {

namespace {

std::string history_string(const History &h) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < h.size(); i++) {
        s << (i ? "," : "") << h[i];
    }
    s << ')';
    return s.str();
}

void require_square(const Matrix &m, Eigen::Index dim, const std::string &what) {
    if (m.rows() != dim || m.cols() != dim) {
        throw std::invalid_argument(what + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
    }
}

void require_psd(const Matrix &m, double tol, const std::string &what) {
    if (hermiticity_error(m) > tol) {
        throw std::invalid_argument(what + " is not Hermitian");
    }
    if (min_eigenvalue(m) < -tol) {
        throw std::invalid_argument(what + " is not positive semidefinite");
    }
}

const Instrument &instrument_at(const SchemePolicy &policy, const History &h) {
    auto it = policy.instruments.find(h);
    if (it == policy.instruments.end()) {
        throw std::invalid_argument("no instrument defined for reachable history " + history_string(h));
    }
    return it->second;
}

const Povm &povm_at(const SchemePolicy &policy, const History &h) {
    auto it = policy.final_povms.find(h);
    if (it == policy.final_povms.end()) {
        throw std::invalid_argument("no final POVM defined for reachable history " + history_string(h));
    }
    return it->second;
}

bool proportional_to_identity(const Matrix &e, double tol) {
    double scale = e.trace().real() / static_cast<double>(e.rows());
    Matrix diff = e;
    diff.diagonal().array() -= scale;
    return diff.size() == 0 || diff.cwiseAbs().maxCoeff() <= tol;
}

bool branch_is_structurally_zero(const KrausBranch &branch) {
    for (const auto &k : branch.kraus_ops) {
        if (k.size() && k.cwiseAbs2().sum() > kPruneThreshold) {
            return false;
        }
    }
    return true;
}

// Structural walk over reachable histories (ignores the channel).
template <typename AtInstrument, typename AtPovm>
void walk_structure(const SchemePolicy &policy, History &h, AtInstrument &&at_instrument, AtPovm &&at_povm) {
    if (h.size() == policy.depth) {
        at_povm(h, povm_at(policy, h));
        return;
    }
    const Instrument &instr = instrument_at(policy, h);
    at_instrument(h, instr);
    for (const auto &[o, branch] : instr.branches) {
        if (branch_is_structurally_zero(branch)) {
            continue;
        }
        h.push_back(o);
        walk_structure(policy, h, at_instrument, at_povm);
        h.pop_back();
    }
}

template <typename AtInstrument, typename AtPovm>
void walk_structure(const SchemePolicy &policy, AtInstrument &&at_instrument, AtPovm &&at_povm) {
    for (const auto &[o0, rho] : policy.initial_ensemble) {
        if (rho.trace().real() <= kPruneThreshold) {
            continue;
        }
        History h{o0};
        walk_structure(policy, h, at_instrument, at_povm);
    }
}

}  // namespace

void validate_instrument(const Instrument &instrument, unsigned n, double tol) {
    auto dim = Eigen::Index{1} << n;
    if (instrument.branches.empty()) {
        throw std::invalid_argument("instrument has no branches");
    }
    Matrix total = Matrix::Zero(dim, dim);
    for (const auto &[o, branch] : instrument.branches) {
        for (const auto &k : branch.kraus_ops) {
            require_square(k, dim, "Kraus operator of outcome " + std::to_string(o));
        }
        total += povm_element_of(branch);
    }
    double err = max_abs_diff(total, Matrix::Identity(dim, dim));
    if (err > tol) {
        throw std::invalid_argument("instrument is not trace preserving: |sum_o E_o - I|_max = " + std::to_string(err));
    }
}

void validate_policy(const SchemePolicy &policy, double tol) {
    if (policy.n == 0 || policy.n > kMaxSchemeQubits) {
        throw std::invalid_argument("scheme simulation supports 1.." + std::to_string(kMaxSchemeQubits) +
                                    " qubits, got " + std::to_string(policy.n));
    }
    if (policy.depth == 0) {
        throw std::invalid_argument("scheme depth must be at least 1");
    }
    auto dim = Eigen::Index{1} << policy.n;
    if (policy.initial_ensemble.empty()) {
        throw std::invalid_argument("initial ensemble is empty");
    }
    double total_trace = 0;
    for (const auto &[o0, rho] : policy.initial_ensemble) {
        std::string what = "initial state " + std::to_string(o0);
        require_square(rho, dim, what);
        require_psd(rho, tol, what);
        total_trace += rho.trace().real();
    }
    if (std::abs(total_trace - 1.0) > tol) {
        throw std::invalid_argument("initial ensemble traces sum to " + std::to_string(total_trace) + ", not 1");
    }
    for (const auto &[h, instr] : policy.instruments) {
        if (h.empty() || h.size() >= policy.depth) {
            throw std::invalid_argument("instrument keyed by history " + history_string(h) +
                                        " of invalid length for depth " + std::to_string(policy.depth));
        }
    }
    for (const auto &[h, povm] : policy.final_povms) {
        if (h.size() != policy.depth) {
            throw std::invalid_argument("final POVM keyed by history " + history_string(h) +
                                        " of invalid length for depth " + std::to_string(policy.depth));
        }
    }
    walk_structure(
        policy,
        [&](const History &h, const Instrument &instr) {
            try {
                validate_instrument(instr, policy.n, tol);
            } catch (const std::invalid_argument &e) {
                throw std::invalid_argument("history " + history_string(h) + ": " + e.what());
            }
        },
        [&](const History &h, const Povm &povm) {
            if (povm.elements.empty()) {
                throw std::invalid_argument("final POVM at " + history_string(h) + " has no elements");
            }
            Matrix total = Matrix::Zero(dim, dim);
            for (const auto &[o, e] : povm.elements) {
                std::string what = "POVM element " + std::to_string(o) + " at " + history_string(h);
                require_square(e, dim, what);
                require_psd(e, tol, what);
                total += e;
            }
            double err = max_abs_diff(total, Matrix::Identity(dim, dim));
            if (err > tol) {
                throw std::invalid_argument("final POVM at " + history_string(h) +
                                            " does not sum to the identity (error " + std::to_string(err) + ")");
            }
        });
}

Matrix apply_channel(const PauliChannel &channel, const Matrix &rho) {
    unsigned n = qubits_for_dimension(rho.rows());
    if (n != channel.num_qubits() || rho.rows() != rho.cols()) {
        throw std::invalid_argument("state dimension does not match channel");
    }
    std::vector<double> r = pauli_expectations(rho);
    auto lambda = channel.eigenvalues();
    for (std::size_t b = 0; b < r.size(); b++) {
        r[b] *= lambda[b];
    }
    Matrix out = from_pauli_expectations(n, r);
    // Pauli expansion above keeps only the Hermitian part; restore the
    // anti-Hermitian part, which a Pauli channel maps the same way.
    if (hermiticity_error(rho) > 0) {
        Matrix anti = (rho - rho.adjoint()) / Complex(0, 2);
        std::vector<double> ra = pauli_expectations(anti);
        for (std::size_t b = 0; b < ra.size(); b++) {
            ra[b] *= lambda[b];
        }
        out += Complex(0, 1) * from_pauli_expectations(n, ra);
    }
    return out;
}

Matrix apply_channel_kraus(const PauliChannel &channel, const Matrix &rho) {
    unsigned n = qubits_for_dimension(rho.rows());
    if (n != channel.num_qubits()) {
        throw std::invalid_argument("state dimension does not match channel");
    }
    auto p = channel.error_rates();
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (std::uint64_t a = 0; a < p.size(); a++) {
        if (p[a] == 0.0) {
            continue;
        }
        Matrix pa = to_matrix(PauliString::from_index(n, a));
        out += p[a] * (pa * rho * pa);
    }
    return out;
}

Matrix apply_branch(const KrausBranch &branch, const Matrix &rho) {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto &k : branch.kraus_ops) {
        out += k * rho * k.adjoint();
    }
    return out;
}

Matrix povm_element_of(const KrausBranch &branch) {
    if (branch.kraus_ops.empty()) {
        throw std::invalid_argument("branch has no Kraus operators");
    }
    Eigen::Index dim = branch.kraus_ops.front().cols();
    Matrix e = Matrix::Zero(dim, dim);
    for (const auto &k : branch.kraus_ops) {
        e += k.adjoint() * k;
    }
    return e;
}

std::vector<InstrumentOutcome> apply_instrument(const Instrument &instrument, const Matrix &rho) {
    std::vector<InstrumentOutcome> out;
    for (const auto &[o, branch] : instrument.branches) {
        Matrix next = apply_branch(branch, rho);
        double prob = next.trace().real();
        if (prob < kPruneThreshold) {
            continue;
        }
        out.push_back({o, prob, next / prob});
    }
    return out;
}

bool is_trivial_instrument(const Instrument &instrument, double tol) {
    for (const auto &[o, branch] : instrument.branches) {
        if (!proportional_to_identity(povm_element_of(branch), tol)) {
            return false;
        }
    }
    return true;
}

bool is_trivial_povm(const Povm &povm, double tol) {
    for (const auto &[o, e] : povm.elements) {
        if (!proportional_to_identity(e, tol)) {
            return false;
        }
    }
    return true;
}

unsigned count_measurements(const SchemePolicy &policy, double tol) {
    // Depth-first with an explicit running count per path.
    unsigned best = 0;
    std::function<void(History &, unsigned)> walk = [&](History &h, unsigned so_far) {
        if (h.size() == policy.depth) {
            best = std::max(best, so_far + (is_trivial_povm(povm_at(policy, h), tol) ? 0u : 1u));
            return;
        }
        const Instrument &instr = instrument_at(policy, h);
        unsigned here = so_far + (is_trivial_instrument(instr, tol) ? 0u : 1u);
        for (const auto &[o, branch] : instr.branches) {
            if (branch_is_structurally_zero(branch)) {
                continue;
            }
            h.push_back(o);
            walk(h, here);
            h.pop_back();
        }
    };
    for (const auto &[o0, rho] : policy.initial_ensemble) {
        if (rho.trace().real() <= kPruneThreshold) {
            continue;
        }
        History h{o0};
        walk(h, 0);
    }
    return best;
}

std::size_t count_leaves(const SchemePolicy &policy) {
    std::size_t leaves = 0;
    walk_structure(
        policy, [](const History &, const Instrument &) {},
        [&](const History &, const Povm &povm) { leaves += povm.elements.size(); });
    return leaves;
}

void for_each_channel_input(const SchemePolicy &policy, const PauliChannel &channel, const StateVisitor &visit) {
    if (channel.num_qubits() != policy.n) {
        throw std::invalid_argument("channel and policy act on different qubit counts");
    }
    std::function<void(History &, double, const Matrix &)> step = [&](History &h, double prob, const Matrix &rho) {
        visit(h, prob, rho);
        if (h.size() == policy.depth) {
            return;
        }
        Matrix after = apply_channel(channel, rho);
        for (auto &branch : apply_instrument(instrument_at(policy, h), after)) {
            if (prob * branch.probability < kPruneThreshold) {
                continue;
            }
            h.push_back(branch.outcome);
            step(h, prob * branch.probability, branch.state);
            h.pop_back();
        }
    };
    for (const auto &[o0, rho] : policy.initial_ensemble) {
        double w = rho.trace().real();
        if (w < kPruneThreshold) {
            continue;
        }
        History h{o0};
        step(h, w, rho / w);
    }
}

OutcomeDistribution run_scheme_exact(const SchemePolicy &policy, const PauliChannel &channel) {
    std::size_t leaves = count_leaves(policy);
    if (leaves > max_enumeration_leaves()) {
        throw std::length_error("history tree has " + std::to_string(leaves) + " leaves, above the cap of " +
                                std::to_string(max_enumeration_leaves()) + " (PAULILEARN_MAX_LEAVES)");
    }
    OutcomeDistribution dist;
    for_each_channel_input(policy, channel, [&](const History &h, double prob, const Matrix &rho) {
        if (h.size() != policy.depth) {
            return;
        }
        Matrix after = apply_channel(channel, rho);
        History full = h;
        full.push_back(0);
        for (const auto &[o, e] : povm_at(policy, h).elements) {
            double q = (e * after).trace().real();
            if (prob * q < kPruneThreshold) {
                continue;
            }
            full.back() = o;
            dist[full] += prob * q;
        }
    });
    return dist;
}

History run_scheme_sampled(const SchemePolicy &policy, const PauliChannel &channel, std::uint64_t seed) {
    if (channel.num_qubits() != policy.n) {
        throw std::invalid_argument("channel and policy act on different qubit counts");
    }
    Rng rng(seed);
    auto pick = [&](const std::vector<double> &weights) {
        std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
        return dist(rng);
    };

    std::vector<Outcome> labels;
    std::vector<double> weights;
    for (const auto &[o0, rho] : policy.initial_ensemble) {
        labels.push_back(o0);
        weights.push_back(std::max(0.0, rho.trace().real()));
    }
    std::size_t k = pick(weights);
    History h{labels[k]};
    const Matrix &rho0 = policy.initial_ensemble.at(labels[k]);
    Matrix rho = rho0 / rho0.trace().real();

    while (h.size() < policy.depth) {
        auto outcomes = apply_instrument(instrument_at(policy, h), apply_channel(channel, rho));
        weights.clear();
        for (const auto &b : outcomes) {
            weights.push_back(b.probability);
        }
        auto &chosen = outcomes[pick(weights)];
        h.push_back(chosen.outcome);
        rho = std::move(chosen.state);
    }
    Matrix after = apply_channel(channel, rho);
    const Povm &povm = povm_at(policy, h);
    labels.clear();
    weights.clear();
    for (const auto &[o, e] : povm.elements) {
        labels.push_back(o);
        weights.push_back(std::max(0.0, (e * after).trace().real()));
    }
    h.push_back(labels[pick(weights)]);
    return h;
}

double ptm_coefficient(const KrausBranch &branch, const PauliString &a, const PauliString &b) {
    Matrix pb = to_matrix(b);
    return pauli_expectation(apply_branch(branch, pb), a) / static_cast<double>(pb.rows());
}

double mu_recurrence_step(double mu, double c00, double ca0, double caa, double c0a, Sign sign, double eps0) {
    double s = to_double(sign);
    double denom = c00 + s * eps0 * mu * c0a;
    if (std::abs(denom) < kPruneThreshold) {
        throw std::domain_error("zero-probability branch in mu recurrence");
    }
    return (ca0 + s * eps0 * mu * caa) / denom;
}

double total_variation_distance(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    double acc = 0;
    auto ip = p.begin();
    auto iq = q.begin();
    while (ip != p.end() || iq != q.end()) {
        if (iq == q.end() || (ip != p.end() && ip->first < iq->first)) {
            acc += std::abs(ip->second);
            ++ip;
        } else if (ip == p.end() || iq->first < ip->first) {
            acc += std::abs(iq->second);
            ++iq;
        } else {
            acc += std::abs(ip->second - iq->second);
            ++ip;
            ++iq;
        }
    }
    return acc / 2;
}

Instrument identity_instrument(unsigned n) {
    auto dim = Eigen::Index{1} << n;
    Instrument instr;
    instr.branches[0].kraus_ops.push_back(Matrix::Identity(dim, dim));
    return instr;
}

Instrument computational_basis_instrument(unsigned n) {
    auto dim = Eigen::Index{1} << n;
    Instrument instr;
    for (Eigen::Index j = 0; j < dim; j++) {
        Matrix k = Matrix::Zero(dim, dim);
        k(j, j) = 1;
        instr.branches[static_cast<Outcome>(j)].kraus_ops.push_back(k);
    }
    return instr;
}

}  // namespace paulilearn
