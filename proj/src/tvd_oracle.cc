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

#include "paulilearn/tvd_oracle.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "paulilearn/bounds.h"
#include "paulilearn/limits.h"

namespace paulilearn {

namespace {

OutcomeDistribution mixture(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    OutcomeDistribution out;
    for (const auto &[h, v] : p) {
        out[h] += v / 2;
    }
    for (const auto &[h, v] : q) {
        out[h] += v / 2;
    }
    return out;
}

void check_policy_matches(const SchemePolicy &policy, const HypothesisFamily &family) {
    validate_family(family);
    if (policy.n != family.n) {
        throw std::invalid_argument("policy acts on " + std::to_string(policy.n) + " qubits but the family on " +
                                    std::to_string(family.n));
    }
}

struct MixedRuns {
    OutcomeDistribution p0;
    std::vector<OutcomeDistribution> mixed;
    std::vector<double> weights;
};

// Exact distributions under Lambda_0 and under every sign-averaged hypothesis.
MixedRuns mixed_runs(const SchemePolicy &policy, const HypothesisFamily &family) {
    check_policy_matches(policy, family);
    validate_policy(policy);
    MixedRuns out;
    out.p0 = run_scheme_exact(policy, completely_depolarizing_channel(family.n));
    auto plus = hypotheses(family, Sign::Plus);
    auto minus = hypotheses(family, Sign::Minus);
    out.mixed.resize(plus.size());
    for (const auto &h : plus) {
        out.weights.push_back(h.weight);
    }
    auto count = static_cast<std::int64_t>(plus.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; i++) {
        try {
            auto k = static_cast<std::size_t>(i);
            out.mixed[k] =
                mixture(run_scheme_exact(policy, plus[k].channel), run_scheme_exact(policy, minus[k].channel));
        } catch (...) {
#pragma omp critical
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

struct WalkStats {
    double max_second_moment = 0;
    double max_initial_second_moment = 0;
    std::size_t nodes = 0;
    double min_step_factor = 1;
};

// Follows every history reachable under Lambda_0 while carrying the
// conditional state of each hypothesis of one sign.
void walk_hypotheses(const SchemePolicy &policy, const std::vector<Hypothesis> &hyps, WalkStats &stats) {
    const unsigned n = policy.n;
    const double dim = std::ldexp(1.0, static_cast<int>(n));
    std::vector<PauliString> paulis;
    for (std::uint64_t b = 0; b < pauli_count(n); b++) {
        paulis.push_back(PauliString::from_index(n, b));
    }
    using States = std::vector<std::optional<Matrix>>;

    auto factor_update = [&](const Matrix &effect, const States &after) {
        double p0 = effect.trace().real() / dim;
        if (p0 < kPruneThreshold) {
            return false;
        }
        for (const auto &s : after) {
            if (s) {
                stats.min_step_factor = std::min(stats.min_step_factor, (effect * *s).trace().real() / p0);
            }
        }
        return true;
    };

    std::function<void(History &, const States &)> visit = [&](History &h, const States &states) {
        stats.nodes++;
        double moment = 0;
        for (std::size_t i = 0; i < hyps.size(); i++) {
            if (!states[i]) {
                continue;
            }
            double inner = 0;
            for (std::uint64_t b : hyps[i].targets) {
                double mu = pauli_expectation(*states[i], paulis[b]);
                inner += mu * mu;
            }
            moment += hyps[i].weight * inner / static_cast<double>(hyps[i].targets.size());
        }
        stats.max_second_moment = std::max(stats.max_second_moment, moment);
        if (h.size() == 1) {
            stats.max_initial_second_moment = std::max(stats.max_initial_second_moment, moment);
        }

        States after(hyps.size());
        for (std::size_t i = 0; i < hyps.size(); i++) {
            if (states[i]) {
                after[i] = apply_channel(hyps[i].channel, *states[i]);
            }
        }
        if (h.size() == policy.depth) {
            for (const auto &[o, e] : policy.final_povms.at(h).elements) {
                factor_update(e, after);
            }
            return;
        }
        for (const auto &[o, branch] : policy.instruments.at(h).branches) {
            if (!factor_update(povm_element_of(branch), after)) {
                continue;
            }
            States next(hyps.size());
            for (std::size_t i = 0; i < hyps.size(); i++) {
                if (!after[i]) {
                    continue;
                }
                Matrix out = apply_branch(branch, *after[i]);
                double p = out.trace().real();
                if (p >= kPruneThreshold) {
                    next[i] = out / p;
                }
            }
            h.push_back(o);
            visit(h, next);
            h.pop_back();
        }
    };

    for (const auto &[o0, rho] : policy.initial_ensemble) {
        double w = rho.trace().real();
        if (w < kPruneThreshold) {
            continue;
        }
        States states(hyps.size(), Matrix(rho / w));
        History h{o0};
        visit(h, states);
    }
}

WalkStats walk_both_signs(const SchemePolicy &policy, const HypothesisFamily &family) {
    WalkStats stats;
    walk_hypotheses(policy, hypotheses(family, Sign::Plus), stats);
    walk_hypotheses(policy, hypotheses(family, Sign::Minus), stats);
    return stats;
}

// Recurrence for a block of targets: mu'_b = (c_{b,0} + s eps0 E_{b'} mu_{b'} c_{b,b'})
//                                          / (c_{0,0} + s eps0 E_{b'} mu_{b'} c_{0,b'}).
MuTrajectoryReport mu_check(const SchemePolicy &policy, const std::vector<std::uint64_t> &targets, double eps0,
                            bool pointwise) {
    validate_policy(policy);
    const unsigned n = policy.n;
    if (targets.empty()) {
        throw std::invalid_argument("mu trajectory check needs at least one target");
    }
    std::vector<PauliString> tp;
    for (std::uint64_t b : targets) {
        if (b == 0 || b >= pauli_count(n)) {
            throw std::invalid_argument("target must be a non-identity Pauli index");
        }
        tp.push_back(PauliString::from_index(n, b));
    }
    const PauliString id = PauliString::identity(n);
    const double k = static_cast<double>(targets.size());
    MuTrajectoryReport report;

    for (Sign sign : {Sign::Plus, Sign::Minus}) {
        PauliChannel channel = pointwise ? make_hypothesis_channel(n, tp[0], sign, eps0)
                                         : make_coarse_hypothesis_channel(n, targets, sign, eps0);
        const double s = to_double(sign);
        std::function<void(History &, const Matrix &, const std::vector<double> &)> visit =
            [&](History &h, const Matrix &rho, const std::vector<double> &mu) {
                report.nodes++;
                for (std::size_t i = 0; i < tp.size(); i++) {
                    report.max_deviation =
                        std::max(report.max_deviation, std::abs(pauli_expectation(rho, tp[i]) - mu[i]));
                }
                if (h.size() == policy.depth) {
                    return;
                }
                const Instrument &instr = policy.instruments.at(h);
                for (auto &out : apply_instrument(instr, apply_channel(channel, rho))) {
                    const KrausBranch &branch = instr.branches.at(out.outcome);
                    double c00 = ptm_coefficient(branch, id, id);
                    std::vector<double> next(tp.size());
                    if (pointwise) {
                        next[0] = mu_recurrence_step(mu[0], c00, ptm_coefficient(branch, tp[0], id),
                                                     ptm_coefficient(branch, tp[0], tp[0]),
                                                     ptm_coefficient(branch, id, tp[0]), sign, eps0);
                    } else {
                        double denom = c00;
                        for (std::size_t j = 0; j < tp.size(); j++) {
                            denom += s * eps0 * mu[j] * ptm_coefficient(branch, id, tp[j]) / k;
                        }
                        if (std::abs(denom) < kPruneThreshold) {
                            continue;
                        }
                        for (std::size_t i = 0; i < tp.size(); i++) {
                            double num = ptm_coefficient(branch, tp[i], id);
                            for (std::size_t j = 0; j < tp.size(); j++) {
                                num += s * eps0 * mu[j] * ptm_coefficient(branch, tp[i], tp[j]) / k;
                            }
                            next[i] = num / denom;
                        }
                    }
                    h.push_back(out.outcome);
                    visit(h, out.state, next);
                    h.pop_back();
                }
            };
        for (const auto &[o0, rho] : policy.initial_ensemble) {
            double w = rho.trace().real();
            if (w < kPruneThreshold) {
                continue;
            }
            Matrix start = rho / w;
            std::vector<double> mu;
            for (const auto &p : tp) {
                mu.push_back(pauli_expectation(start, p));
            }
            History h{o0};
            visit(h, start, mu);
        }
    }
    return report;
}

}  // namespace

FamilyKind parse_family_kind(const std::string &name) {
    if (name == "pointwise") {
        return FamilyKind::Pointwise;
    }
    if (name == "coarse") {
        return FamilyKind::Coarse;
    }
    throw std::invalid_argument("unknown hypothesis family \"" + name + "\" (expected pointwise or coarse)");
}

HypothesisFamily HypothesisFamily::pointwise(unsigned n, double eps0) {
    HypothesisFamily f;
    f.n = n;
    f.eps0 = eps0;
    f.kind = FamilyKind::Pointwise;
    return f;
}

HypothesisFamily HypothesisFamily::coarse(Partition partition, double eps0) {
    HypothesisFamily f;
    f.n = partition.num_qubits();
    f.eps0 = eps0;
    f.kind = FamilyKind::Coarse;
    f.partition = std::move(partition);
    return f;
}

void validate_family(const HypothesisFamily &family) {
    if (family.n == 0 || family.n > kMaxSchemeQubits) {
        throw std::invalid_argument("hypothesis family qubit count out of range");
    }
    if (!(family.eps0 >= 0 && family.eps0 <= 1)) {
        throw std::invalid_argument("eps0 must lie in [0, 1]");
    }
    if (family.kind == FamilyKind::Coarse) {
        if (!family.partition) {
            throw std::invalid_argument("the coarse family needs a partition");
        }
        if (family.partition->num_qubits() != family.n) {
            throw std::invalid_argument("partition qubit count does not match the family");
        }
    }
}

std::vector<Hypothesis> hypotheses(const HypothesisFamily &family, Sign sign) {
    validate_family(family);
    std::vector<Hypothesis> out;
    std::uint64_t count = pauli_count(family.n);
    if (family.kind == FamilyKind::Pointwise) {
        double w = 1.0 / static_cast<double>(count - 1);
        for (std::uint64_t a = 1; a < count; a++) {
            out.push_back({make_hypothesis_channel(family.n, PauliString::from_index(family.n, a), sign, family.eps0),
                           {a},
                           w});
        }
        return out;
    }
    const Partition &part = *family.partition;
    for (std::size_t i = 0; i < part.blocks().size(); i++) {
        const auto &block = part.blocks()[i];
        out.push_back({make_coarse_hypothesis_channel(family.n, block, sign, family.eps0), block,
                       part.block_probability(i)});
    }
    return out;
}

double avg_tvd(const SchemePolicy &policy, const HypothesisFamily &family) {
    MixedRuns runs = mixed_runs(policy, family);
    double acc = 0;
    for (std::size_t i = 0; i < runs.mixed.size(); i++) {
        acc += runs.weights[i] * total_variation_distance(runs.p0, runs.mixed[i]);
    }
    return acc;
}

double tvd_budget(unsigned n_meas, unsigned n, double eps0) {
    double pn = std::ldexp(1.0, static_cast<int>(n));
    return n_meas * eps0 * eps0 * pn / (pn * pn - 1) * (1 + 2 * std::sqrt(f_of(eps0)));
}

double tvd_budget(const SchemePolicy &policy, const HypothesisFamily &family) {
    check_policy_matches(policy, family);
    return tvd_budget(count_measurements(policy), family.n, family.eps0);
}

InequalityReport certify_inequality(const SchemePolicy &policy, const HypothesisFamily &family) {
    InequalityReport r;
    r.n_meas = count_measurements(policy);
    r.rhs = tvd_budget(r.n_meas, family.n, family.eps0);
    r.lhs = avg_tvd(policy, family);
    r.slack = r.rhs - r.lhs;
    r.holds = r.lhs <= r.rhs + kCertifyTolerance;
    r.min_step_factor = walk_both_signs(policy, family).min_step_factor;
    return r;
}

MuTrajectoryReport mu_trajectory_check(const SchemePolicy &policy, std::uint64_t a, double eps0) {
    return mu_check(policy, {a}, eps0, true);
}

MuTrajectoryReport mu_trajectory_check_coarse(const SchemePolicy &policy, const std::vector<std::uint64_t> &block,
                                              double eps0) {
    return mu_check(policy, block, eps0, false);
}

SecondMomentReport second_moment_check(const SchemePolicy &policy, const HypothesisFamily &family) {
    check_policy_matches(policy, family);
    validate_policy(policy);
    if (family.eps0 > 1.0 / 3) {
        throw std::invalid_argument("the second-moment bound needs eps0 <= 1/3");
    }
    double pn = std::ldexp(1.0, static_cast<int>(family.n));
    double e = family.eps0;
    SecondMomentReport r;
    r.initial_bound = pn / (pn * pn - 1);
    r.bound = 2 / (1 - 2 * e - e * e) * r.initial_bound;
    WalkStats stats = walk_both_signs(policy, family);
    r.max_second_moment = stats.max_second_moment;
    r.max_initial_second_moment = stats.max_initial_second_moment;
    r.nodes = stats.nodes;
    r.min_step_factor = stats.min_step_factor;
    r.holds = r.max_second_moment <= r.bound + kCertifyTolerance &&
              r.max_initial_second_moment <= r.initial_bound + kCertifyTolerance;
    return r;
}

double game_success_exact(const SchemePolicy &policy, const HypothesisFamily &family, const GameDecision &decide) {
    MixedRuns runs = mixed_runs(policy, family);
    double acc = 0;
    for (std::size_t i = 0; i < runs.mixed.size(); i++) {
        double win = 0;
        for (const auto &[h, p] : runs.p0) {
            win += decide(h, i) ? 0 : p;
        }
        for (const auto &[h, q] : runs.mixed[i]) {
            win += decide(h, i) ? q : 0;
        }
        acc += runs.weights[i] * win / 2;
    }
    return acc;
}

double game_success_optimal(const SchemePolicy &policy, const HypothesisFamily &family) {
    return 0.5 + 0.5 * avg_tvd(policy, family);
}

}  // namespace paulilearn
