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

#include "paulilearn/lecam_game.h"

#include <cmath>
#include <exception>
#include <random>
#include <stdexcept>

#include "paulilearn/protocols.h"

namespace paulilearn {

namespace {

struct TrialRecord {
    std::uint64_t a;
    int s;
    bool perturbed;
    int verdict;
};

TrialRecord run_trial(unsigned n, double eps0, const GamePlayer &player, std::uint64_t master_seed, std::uint64_t t) {
    Rng rng = make_rng(master_seed, t);
    std::uint64_t count = pauli_count(n);
    TrialRecord r;
    r.a = std::uniform_int_distribution<std::uint64_t>(1, count - 1)(rng);
    r.s = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    r.perturbed = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    PauliChannel channel = r.perturbed ? make_hypothesis_channel(n, PauliString::from_index(n, r.a),
                                                                 r.s > 0 ? Sign::Plus : Sign::Minus, eps0)
                                       : completely_depolarizing_channel(n);
    EigenvalueQuery query = player.measure(channel, rng);
    r.verdict = classify_eigenvalue(query(r.a), eps0);
    return r;
}

GameResult tally(const std::vector<TrialRecord> &records) {
    GameResult out;
    out.trials = records.size();
    for (const auto &r : records) {
        bool success = (r.verdict != 0) == r.perturbed;
        out.successes += success;
        if (r.perturbed) {
            out.perturbed_trials++;
            out.correct_sign += r.verdict == r.s;
        }
        auto &cell = out.breakdown[{r.a, r.s}];
        cell.trials++;
        cell.successes += success;
    }
    return out;
}

void check_game(unsigned n, double eps0, std::uint64_t trials) {
    if (n == 0 || n > kMaxIndexQubits) {
        throw std::invalid_argument("game qubit count out of range");
    }
    if (!(eps0 > 0 && eps0 <= 1)) {
        throw std::invalid_argument("eps0 must lie in (0, 1]");
    }
    if (trials == 0) {
        throw std::invalid_argument("the game needs at least one trial");
    }
}

}  // namespace

EigenvalueQuery TruthPlayer::measure(const PauliChannel &channel, Rng &) const {
    return [channel](std::uint64_t a) { return channel.eigenvalues()[a]; };
}

EigenvalueQuery IgnorePlayer::measure(const PauliChannel &, Rng &) const {
    return [](std::uint64_t) { return 0.0; };
}

EntanglementAssistedPlayer::EntanglementAssistedPlayer(std::uint64_t shots, double p_depol)
    : shots_(shots), p_(p_depol) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    fidelity_from_p(p_depol);
}

EigenvalueQuery EntanglementAssistedPlayer::measure(const PauliChannel &channel, Rng &rng) const {
    auto samples = std::make_shared<std::vector<std::uint64_t>>(bell_samples(channel, p_, shots_, rng));
    unsigned n = channel.num_qubits();
    double p = p_;
    return [samples, n, p](std::uint64_t a) { return ea_estimate(*samples, a, n, p); };
}

AncillaFreePlayer::AncillaFreePlayer(std::vector<CommutingGroup> cover, std::uint64_t shots_per_group)
    : cover_(std::move(cover)), shots_per_group_(shots_per_group) {
    if (shots_per_group == 0) {
        throw std::invalid_argument("shots per group must be positive");
    }
}

EigenvalueQuery AncillaFreePlayer::measure(const PauliChannel &channel, Rng &rng) const {
    auto est = std::make_shared<AfEstimates>(af_estimate_all(channel, shots_per_group_, cover_, rng));
    return [est](std::uint64_t a) { return est->estimates.at(a); };
}

int classify_eigenvalue(double estimate, double eps0) {
    if (estimate > eps0 / 2) {
        return 1;
    }
    if (estimate < -eps0 / 2) {
        return -1;
    }
    return 0;
}

double GameResult::success_rate() const {
    return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
}

double GameResult::standard_error() const {
    double q = success_rate();
    return trials ? std::sqrt(q * (1 - q) / static_cast<double>(trials)) : 0.0;
}

double GameResult::sign_accuracy() const {
    return perturbed_trials ? static_cast<double>(correct_sign) / static_cast<double>(perturbed_trials) : 0.0;
}

GameResult lecam_game(unsigned n, double eps0, const GamePlayer &player, std::uint64_t trials,
                      std::uint64_t master_seed) {
    check_game(n, eps0, trials);
    std::vector<TrialRecord> records(trials);
    auto count = static_cast<std::int64_t>(trials);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t t = 0; t < count; t++) {
        try {
            records[static_cast<std::size_t>(t)] =
                run_trial(n, eps0, player, master_seed, static_cast<std::uint64_t>(t));
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
    return tally(records);
}

GameResult lecam_game_serial(unsigned n, double eps0, const GamePlayer &player, std::uint64_t trials,
                             std::uint64_t master_seed) {
    check_game(n, eps0, trials);
    std::vector<TrialRecord> records(trials);
    for (std::uint64_t t = 0; t < trials; t++) {
        records[t] = run_trial(n, eps0, player, master_seed, t);
    }
    return tally(records);
}

}  // namespace paulilearn
