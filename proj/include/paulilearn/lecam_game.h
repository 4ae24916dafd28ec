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

#ifndef PAULILEARN_LECAM_GAME_H
#define PAULILEARN_LECAM_GAME_H

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "paulilearn/channel.h"
#include "paulilearn/cover.h"
#include "paulilearn/seeding.h"

namespace paulilearn {

/// An eigenvalue query lambda-hat(a) built from the data a player gathered.
using EigenvalueQuery = std::function<double(std::uint64_t a)>;

/// A learning protocol as seen by the game: it interacts with the channel
/// before the reveal and answers eigenvalue queries afterwards.
class GamePlayer {
   public:
    virtual ~GamePlayer() = default;
    virtual EigenvalueQuery measure(const PauliChannel &channel, Rng &rng) const = 0;
};

/// Answers with the exact eigenvalue.
class TruthPlayer : public GamePlayer {
   public:
    EigenvalueQuery measure(const PauliChannel &channel, Rng &rng) const override;
};

/// Never looks at the channel; always answers 0.
class IgnorePlayer : public GamePlayer {
   public:
    EigenvalueQuery measure(const PauliChannel &channel, Rng &rng) const override;
};

/// Bell sampling with `shots` uses of the channel and noise p.
class EntanglementAssistedPlayer : public GamePlayer {
   public:
    EntanglementAssistedPlayer(std::uint64_t shots, double p_depol);
    EigenvalueQuery measure(const PauliChannel &channel, Rng &rng) const override;

   private:
    std::uint64_t shots_;
    double p_;
};

/// Simultaneous measurement of every group of a commuting cover.
class AncillaFreePlayer : public GamePlayer {
   public:
    AncillaFreePlayer(std::vector<CommutingGroup> cover, std::uint64_t shots_per_group);
    EigenvalueQuery measure(const PauliChannel &channel, Rng &rng) const override;

   private:
    std::vector<CommutingGroup> cover_;
    std::uint64_t shots_per_group_;
};

/// -1, 0 or +1: nearest of {-eps0, 0, +eps0} using midpoint thresholds.
int classify_eigenvalue(double estimate, double eps0);

struct GameCell {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
};

struct GameResult {
    std::uint64_t trials = 0;
    /// Trials where the player correctly told Lambda_0 from Lambda_{a,s}.
    std::uint64_t successes = 0;
    /// Trials with action Lambda_{a,s}, and those among them whose
    /// classification also had sign s.
    std::uint64_t perturbed_trials = 0;
    std::uint64_t correct_sign = 0;
    /// Keyed by (a, s).
    std::map<std::pair<std::uint64_t, int>, GameCell> breakdown;

    double success_rate() const;
    /// Binomial standard error of success_rate.
    double standard_error() const;
    double sign_accuracy() const;
};

/// Each trial: the referee draws a != 0 and s = +-1 uniformly and flips a
/// fair coin between Lambda_0 and Lambda_{a,s}; the player measures, (a, s)
/// is revealed, and the player calls Lambda_0 iff classify_eigenvalue gives
/// 0. Trial t uses the stream derive_seed(master_seed, t), so the result does
/// not depend on the thread count.
GameResult lecam_game(unsigned n, double eps0, const GamePlayer &player, std::uint64_t trials,
                      std::uint64_t master_seed);

/// Same trials run on the calling thread only.
GameResult lecam_game_serial(unsigned n, double eps0, const GamePlayer &player, std::uint64_t trials,
                             std::uint64_t master_seed);

}  // namespace paulilearn

#endif
