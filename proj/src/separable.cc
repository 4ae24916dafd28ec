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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "paulilearn/limits.h"

namespace paulilearn {

namespace {

constexpr Eigen::Index kMaxJointDimension = 1024;

Matrix kraus_sum(const std::vector<Matrix> &kraus, const Matrix &rho) {
    Matrix out = Matrix::Zero(kraus.front().rows(), kraus.front().rows());
    for (const auto &k : kraus) {
        out += k * rho * k.adjoint();
    }
    return out;
}

Matrix adjoint_on_identity(const std::vector<Matrix> &kraus) {
    Matrix out = Matrix::Zero(kraus.front().cols(), kraus.front().cols());
    for (const auto &k : kraus) {
        out += k.adjoint() * k;
    }
    return out;
}

void check_shape(const Matrix &m, Eigen::Index dim, const std::string &what) {
    if (m.rows() != dim || m.cols() != dim) {
        throw std::invalid_argument(what + " has the wrong shape");
    }
}

void check_psd(const Matrix &m, double tol, const std::string &what) {
    if (hermiticity_error(m) > tol || min_eigenvalue(m) < -tol) {
        throw std::invalid_argument(what + " is not positive semidefinite");
    }
}

void check_kraus(const std::vector<Matrix> &kraus, Eigen::Index dim, const std::string &what) {
    if (kraus.empty()) {
        throw std::invalid_argument(what + " has no Kraus operators");
    }
    for (const auto &k : kraus) {
        check_shape(k, dim, what);
    }
}

// Applies id_A (x) Lambda blockwise; the map is linear so each block of the
// joint matrix transforms independently.
Matrix apply_channel_to_system(const PauliChannel &channel, const Matrix &rho, Eigen::Index ancilla_dim) {
    Eigen::Index s = rho.rows() / ancilla_dim;
    Matrix out(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < ancilla_dim; i++) {
        for (Eigen::Index j = 0; j < ancilla_dim; j++) {
            out.block(i * s, j * s, s, s) = apply_channel(channel, rho.block(i * s, j * s, s, s));
        }
    }
    return out;
}

}  // namespace

void validate_separable(const SeparableScheme &scheme, double tol) {
    if (scheme.n == 0 || scheme.n > kMaxSchemeQubits) {
        throw std::invalid_argument("separable scheme qubit count out of range");
    }
    if (scheme.ancilla_dim == 0 || scheme.depth == 0) {
        throw std::invalid_argument("ancilla dimension and depth must be positive");
    }
    auto da = static_cast<Eigen::Index>(scheme.ancilla_dim);
    auto ds = Eigen::Index{1} << scheme.n;
    if (da * ds > kMaxJointDimension) {
        throw std::invalid_argument("joint dimension " + std::to_string(da * ds) + " exceeds " +
                                    std::to_string(kMaxJointDimension));
    }
    if (scheme.channels.size() + 1 != scheme.depth) {
        throw std::invalid_argument("separable scheme of depth " + std::to_string(scheme.depth) + " needs " +
                                    std::to_string(scheme.depth - 1) + " processing channels");
    }
    if (scheme.initial_state.empty()) {
        throw std::invalid_argument("separable initial state has no terms");
    }
    double trace = 0;
    for (const auto &term : scheme.initial_state) {
        check_shape(term.ancilla, da, "initial ancilla factor");
        check_shape(term.system, ds, "initial system factor");
        check_psd(term.ancilla, tol, "initial ancilla factor");
        check_psd(term.system, tol, "initial system factor");
        trace += term.ancilla.trace().real() * term.system.trace().real();
    }
    if (std::abs(trace - 1) > tol) {
        throw std::invalid_argument("separable initial state has trace " + std::to_string(trace));
    }
    Matrix identity = Matrix::Identity(da * ds, da * ds);
    for (std::size_t t = 0; t < scheme.channels.size(); t++) {
        std::string what = "processing channel " + std::to_string(t + 1);
        if (scheme.channels[t].empty()) {
            throw std::invalid_argument(what + " has no terms");
        }
        Matrix total = Matrix::Zero(da * ds, da * ds);
        for (const auto &term : scheme.channels[t]) {
            check_kraus(term.ancilla_kraus, da, what + " ancilla factor");
            check_kraus(term.system_kraus, ds, what + " system factor");
            total += kron(adjoint_on_identity(term.ancilla_kraus), adjoint_on_identity(term.system_kraus));
        }
        if (max_abs_diff(total, identity) > tol) {
            throw std::invalid_argument(what + " is not trace preserving");
        }
    }
    if (scheme.povm.empty()) {
        throw std::invalid_argument("separable POVM has no elements");
    }
    Matrix total = Matrix::Zero(da * ds, da * ds);
    for (const auto &[k, terms] : scheme.povm) {
        for (const auto &term : terms) {
            std::string what = "POVM element " + std::to_string(k);
            check_shape(term.ancilla, da, what);
            check_shape(term.system, ds, what);
            check_psd(term.ancilla, tol, what + " ancilla factor");
            check_psd(term.system, tol, what + " system factor");
            total += kron(term.ancilla, term.system);
        }
    }
    if (max_abs_diff(total, identity) > tol) {
        throw std::invalid_argument("separable POVM does not sum to the identity");
    }
}

std::map<Outcome, double> run_separable_exact(const SeparableScheme &scheme, const PauliChannel &channel) {
    validate_separable(scheme);
    if (channel.num_qubits() != scheme.n) {
        throw std::invalid_argument("channel and separable scheme act on different qubit counts");
    }
    auto da = static_cast<Eigen::Index>(scheme.ancilla_dim);
    auto ds = Eigen::Index{1} << scheme.n;
    Matrix rho = Matrix::Zero(da * ds, da * ds);
    for (const auto &term : scheme.initial_state) {
        rho += kron(term.ancilla, term.system);
    }
    for (unsigned t = 1; t <= scheme.depth; t++) {
        rho = apply_channel_to_system(channel, rho, da);
        if (t == scheme.depth) {
            break;
        }
        Matrix next = Matrix::Zero(da * ds, da * ds);
        for (const auto &term : scheme.channels[t - 1]) {
            for (const auto &a : term.ancilla_kraus) {
                for (const auto &b : term.system_kraus) {
                    Matrix k = kron(a, b);
                    next += k * rho * k.adjoint();
                }
            }
        }
        rho = std::move(next);
    }
    std::map<Outcome, double> out;
    for (const auto &[k, terms] : scheme.povm) {
        double p = 0;
        for (const auto &term : terms) {
            p += (kron(term.ancilla, term.system) * rho).trace().real();
        }
        out[k] = p;
    }
    return out;
}

CompiledPolicy compile_separable_to_cma(const SeparableScheme &scheme, double tol) {
    validate_separable(scheme, tol);
    CompiledPolicy out;
    SchemePolicy &policy = out.policy;
    policy.n = scheme.n;
    policy.depth = scheme.depth;

    // Global labels for the final POVM: one per (k, j) pair.
    std::vector<std::pair<Outcome, const ProductTerm *>> final_terms;
    for (const auto &[k, terms] : scheme.povm) {
        for (const auto &term : terms) {
            out.final_outcome_to_k[static_cast<Outcome>(final_terms.size())] = k;
            final_terms.emplace_back(k, &term);
        }
    }

    // tau is the unnormalized ancilla factor (A_{t,j_t} ... A_{1,j_1})(sigma_{j_0}).
    std::function<void(History &, const Matrix &)> build = [&](History &h, const Matrix &tau) {
        double tau_trace = tau.trace().real();
        if (h.size() == scheme.depth) {
            Povm povm;
            for (std::size_t label = 0; label < final_terms.size(); label++) {
                const ProductTerm &term = *final_terms[label].second;
                double w = (term.ancilla * tau).trace().real() / tau_trace;
                if (w < kPruneThreshold) {
                    continue;
                }
                povm.elements[static_cast<Outcome>(label)] = w * term.system;
            }
            policy.final_povms[h] = std::move(povm);
            return;
        }
        Instrument instr;
        const auto &terms = scheme.channels[h.size() - 1];
        std::vector<std::pair<Outcome, Matrix>> children;
        for (std::size_t j = 0; j < terms.size(); j++) {
            Matrix next = kraus_sum(terms[j].ancilla_kraus, tau);
            double w = next.trace().real() / tau_trace;
            if (w < kPruneThreshold) {
                continue;
            }
            KrausBranch branch;
            for (const auto &b : terms[j].system_kraus) {
                branch.kraus_ops.push_back(std::sqrt(w) * b);
            }
            instr.branches[static_cast<Outcome>(j)] = std::move(branch);
            children.emplace_back(static_cast<Outcome>(j), std::move(next));
        }
        policy.instruments[h] = std::move(instr);
        for (auto &[j, next] : children) {
            h.push_back(j);
            build(h, next);
            h.pop_back();
        }
    };

    for (std::size_t j = 0; j < scheme.initial_state.size(); j++) {
        const ProductTerm &term = scheme.initial_state[j];
        double w = term.ancilla.trace().real();
        if (w * term.system.trace().real() < kPruneThreshold) {
            continue;
        }
        policy.initial_ensemble[static_cast<Outcome>(j)] = w * term.system;
        History h{static_cast<Outcome>(j)};
        build(h, term.ancilla);
    }
    return out;
}

std::map<Outcome, double> marginalize_final(const OutcomeDistribution &dist,
                                            const std::map<Outcome, Outcome> &final_outcome_to_k) {
    std::map<Outcome, double> out;
    for (const auto &[h, p] : dist) {
        out[final_outcome_to_k.at(h.back())] += p;
    }
    return out;
}

std::vector<std::size_t> CompiledSeparable::radices() const {
    std::vector<std::size_t> r;
    for (const auto &a : alphabets) {
        r.push_back(a.size());
    }
    return r;
}

Outcome CompiledSeparable::encode(const History &history) const {
    if (history.size() != alphabets.size()) {
        throw std::invalid_argument("history length does not match the register count");
    }
    std::uint64_t label = 0;
    for (std::size_t t = 0; t < history.size(); t++) {
        const auto &a = alphabets[t];
        auto it = std::lower_bound(a.begin(), a.end(), history[t]);
        if (it == a.end() || *it != history[t]) {
            throw std::invalid_argument("outcome " + std::to_string(history[t]) + " is not in the alphabet of step " +
                                        std::to_string(t));
        }
        label = label * a.size() + static_cast<std::uint64_t>(it - a.begin());
    }
    return static_cast<Outcome>(label);
}

History CompiledSeparable::decode(Outcome label) const {
    History h(alphabets.size());
    std::uint64_t rest = label;
    for (std::size_t t = alphabets.size(); t-- > 0;) {
        h[t] = alphabets[t][rest % alphabets[t].size()];
        rest /= alphabets[t].size();
    }
    if (rest != 0) {
        throw std::invalid_argument("label " + std::to_string(label) + " is out of range");
    }
    return h;
}

CompiledSeparable compile_cma_to_separable(const SchemePolicy &policy) {
    validate_policy(policy);
    const unsigned depth = policy.depth;
    CompiledSeparable out;
    out.alphabets.resize(depth + 1);
    std::vector<std::set<Outcome>> seen(depth + 1);
    for (const auto &[o, rho] : policy.initial_ensemble) {
        seen[0].insert(o);
    }
    for (const auto &[h, instr] : policy.instruments) {
        for (const auto &[o, branch] : instr.branches) {
            seen[h.size()].insert(o);
        }
    }
    for (const auto &[h, povm] : policy.final_povms) {
        for (const auto &[o, e] : povm.elements) {
            seen[depth].insert(o);
        }
    }
    std::uint64_t ancilla_dim = 1;
    for (unsigned t = 0; t <= depth; t++) {
        out.alphabets[t].assign(seen[t].begin(), seen[t].end());
        if (t < depth) {
            ancilla_dim *= out.alphabets[t].size();
        }
    }
    auto ds = Eigen::Index{1} << policy.n;
    if (ancilla_dim * static_cast<std::uint64_t>(ds) > static_cast<std::uint64_t>(kMaxJointDimension)) {
        throw std::length_error("register ancilla of dimension " + std::to_string(ancilla_dim) +
                                " is too large for dense simulation");
    }
    std::uint64_t labels = ancilla_dim * out.alphabets[depth].size();
    if (labels > std::numeric_limits<Outcome>::max()) {
        throw std::length_error("too many complete histories to label");
    }
    auto da = static_cast<Eigen::Index>(ancilla_dim);

    // stride[t] = weight of register t in the ancilla basis index.
    std::vector<std::uint64_t> stride(depth, 1);
    for (unsigned t = depth; t-- > 1;) {
        stride[t - 1] = stride[t] * out.alphabets[t].size();
    }
    auto digit = [&](std::uint64_t basis, unsigned t) { return (basis / stride[t]) % out.alphabets[t].size(); };
    // History spelled by the first len registers of an ancilla basis index.
    auto prefix_history = [&](std::uint64_t basis, unsigned len) {
        History h(len);
        for (unsigned s = 0; s < len; s++) {
            h[s] = out.alphabets[s][digit(basis, s)];
        }
        return h;
    };

    SeparableScheme &sep = out.scheme;
    sep.n = policy.n;
    sep.ancilla_dim = static_cast<unsigned>(ancilla_dim);
    sep.depth = depth;

    for (std::size_t i = 0; i < out.alphabets[0].size(); i++) {
        Matrix sigma = Matrix::Zero(da, da);
        auto basis = static_cast<Eigen::Index>(i * stride[0]);
        sigma(basis, basis) = 1;
        sep.initial_state.push_back({sigma, policy.initial_ensemble.at(out.alphabets[0][i])});
    }

    for (unsigned t = 1; t < depth; t++) {
        std::vector<ProductMap> terms;
        std::uint64_t prefixes = ancilla_dim / (stride[t - 1]);
        for (std::uint64_t p = 0; p < prefixes; p++) {
            std::uint64_t prefix_base = p * stride[t - 1];
            History h = prefix_history(prefix_base, t);
            auto it = policy.instruments.find(h);
            Instrument fallback;
            if (it == policy.instruments.end()) {
                fallback.branches[out.alphabets[t][0]].kraus_ops.push_back(Matrix::Identity(ds, ds));
            }
            const Instrument &instr = it == policy.instruments.end() ? fallback : it->second;
            for (const auto &[o, branch] : instr.branches) {
                auto target = static_cast<std::uint64_t>(
                    std::lower_bound(out.alphabets[t].begin(), out.alphabets[t].end(), o) - out.alphabets[t].begin());
                ProductMap term;
                term.system_kraus = branch.kraus_ops;
                // Kraus ops Pi_prefix (x) |o_t><m| (x) I, one per m.
                for (std::uint64_t m = 0; m < out.alphabets[t].size(); m++) {
                    Matrix k = Matrix::Zero(da, da);
                    for (std::uint64_t rest = 0; rest < stride[t]; rest++) {
                        std::uint64_t from = prefix_base + m * stride[t] + rest;
                        std::uint64_t to = prefix_base + target * stride[t] + rest;
                        k(static_cast<Eigen::Index>(to), static_cast<Eigen::Index>(from)) = 1;
                    }
                    term.ancilla_kraus.push_back(std::move(k));
                }
                terms.push_back(std::move(term));
            }
        }
        sep.channels.push_back(std::move(terms));
    }

    for (std::uint64_t basis = 0; basis < ancilla_dim; basis++) {
        History h = prefix_history(basis, depth);
        Matrix proj = Matrix::Zero(da, da);
        proj(static_cast<Eigen::Index>(basis), static_cast<Eigen::Index>(basis)) = 1;
        auto it = policy.final_povms.find(h);
        if (it == policy.final_povms.end()) {
            h.push_back(out.alphabets[depth][0]);
            sep.povm[out.encode(h)].push_back({proj, Matrix::Identity(ds, ds)});
            continue;
        }
        h.push_back(0);
        for (const auto &[o, e] : it->second.elements) {
            h.back() = o;
            sep.povm[out.encode(h)].push_back({proj, e});
        }
    }
    return out;
}

}  // namespace paulilearn
