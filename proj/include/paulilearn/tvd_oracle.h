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

#ifndef PAULILEARN_TVD_ORACLE_H
#define PAULILEARN_TVD_ORACLE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paulilearn/channel.h"
#include "paulilearn/scheme.h"

namespace paulilearn {

enum class FamilyKind { Pointwise, Coarse };

FamilyKind parse_family_kind(const std::string &name);

/// The perturbations Lambda_{a,+-} (a uniform over non-identity Paulis) or
/// Lambda_{B,+-} (B drawn with probability |B|/(4^n - 1)), both against the
/// completely depolarizing Lambda_0.
struct HypothesisFamily {
    unsigned n = 1;
    double eps0 = 0.1;
    FamilyKind kind = FamilyKind::Pointwise;
    /// Required for the coarse kind.
    std::optional<Partition> partition;

    static HypothesisFamily pointwise(unsigned n, double eps0);
    static HypothesisFamily coarse(Partition partition, double eps0);
};

/// One member of the family for a fixed sign.
struct Hypothesis {
    PauliChannel channel;
    /// {a} or the block B.
    std::vector<std::uint64_t> targets;
    /// 1/(4^n - 1) or pi(B).
    double weight;
};

/// Throws std::invalid_argument unless 0 <= eps0 <= 1 and the partition
/// (when needed) matches n.
void validate_family(const HypothesisFamily &family);

std::vector<Hypothesis> hypotheses(const HypothesisFamily &family, Sign sign);

/// E_h TVD(p_0, (p_{h,+} + p_{h,-}) / 2) from exact outcome distributions,
/// with h weighted as in the family. Hypotheses run in parallel.
double avg_tvd(const SchemePolicy &policy, const HypothesisFamily &family);

/// N_meas eps0^2 2^n / (4^n - 1) (1 + 2 sqrt(f(eps0))); needs eps0 <= 1/3.
double tvd_budget(const SchemePolicy &policy, const HypothesisFamily &family);
double tvd_budget(unsigned n_meas, unsigned n, double eps0);

struct InequalityReport {
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
    double slack = 0;
    unsigned n_meas = 0;
    /// Smallest one-step likelihood ratio p_h(o_t | o_<t) / p_0(o_t | o_<t)
    /// seen anywhere in the tree; 1 when the tree has no steps to compare.
    double min_step_factor = 1;
};

/// Small absolute allowance for round-off when comparing lhs <= rhs.
inline constexpr double kCertifyTolerance = 1e-12;
/// Step factors below this are flagged for inspection.
inline constexpr double kStepFactorWarning = 0.01;

InequalityReport certify_inequality(const SchemePolicy &policy, const HypothesisFamily &family);

struct MuTrajectoryReport {
    double max_deviation = 0;
    std::size_t nodes = 0;
};

/// Along every branch and for both signs, compares Tr(P_a rho) of the dense
/// conditional state with the scalar recurrence started from the initial
/// state. Returns the largest absolute difference.
MuTrajectoryReport mu_trajectory_check(const SchemePolicy &policy, std::uint64_t a, double eps0);

/// The same for Lambda_{B,+-}, where the recurrence carries one value per
/// element of B.
MuTrajectoryReport mu_trajectory_check_coarse(const SchemePolicy &policy, const std::vector<std::uint64_t> &block,
                                              double eps0);

struct SecondMomentReport {
    /// 2/(1 - 2 eps0 - eps0^2) 2^n / (4^n - 1).
    double bound = 0;
    /// 2^n / (4^n - 1), the bound for the initial states.
    double initial_bound = 0;
    /// Largest E_h E_{b in h} Tr^2(P_b rho_h) over nodes and signs.
    double max_second_moment = 0;
    double max_initial_second_moment = 0;
    std::size_t nodes = 0;
    double min_step_factor = 1;
    bool holds = false;
};

/// Checks the averaged second-moment bound at every reachable history and
/// for each sign, using dense conditional states under every hypothesis.
SecondMomentReport second_moment_check(const SchemePolicy &policy, const HypothesisFamily &family);

/// Decides "perturbed" from the full history and the revealed hypothesis
/// (index into hypotheses(family, Plus), the sign being hidden).
using GameDecision = std::function<bool(const History &history, std::size_t hypothesis)>;

/// Exact winning probability of the game played with a fixed decision rule.
double game_success_exact(const SchemePolicy &policy, const HypothesisFamily &family, const GameDecision &decide);

/// 1/2 + avg_tvd/2, the best any decision rule can do with this policy.
double game_success_optimal(const SchemePolicy &policy, const HypothesisFamily &family);

}  // namespace paulilearn

#endif
