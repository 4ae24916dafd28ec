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

// Acceptance run: one PASS/FAIL line per criterion. Every tolerance, sample
// size and time limit is fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.h"
#include "paulilearn/bounds.h"
#include "paulilearn/channel.h"
#include "paulilearn/cover.h"
#include "paulilearn/lecam_game.h"
#include "paulilearn/protocols.h"
#include "paulilearn/random_scheme.h"
#include "paulilearn/separable.h"
#include "paulilearn/tvd_oracle.h"

using namespace paulilearn;

namespace {

constexpr std::uint64_t kSeed = 0x5EED2026ULL;
constexpr double kDelta = 1.0 / 3;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Sign table (-1)^{<a,b>} from single-qubit letters, independent of the
// library's bit tricks.
std::vector<int> sign_table(unsigned n) {
    std::size_t len = std::size_t{1} << (2 * n);
    std::vector<std::string> letters(len);
    for (std::size_t a = 0; a < len; a++) {
        letters[a] = oracles::index_letters(n, a);
    }
    std::vector<int> out(len * len);
    for (std::size_t a = 0; a < len; a++) {
        for (std::size_t b = 0; b < len; b++) {
            out[a * len + b] = oracles::anticommutes(letters[a], letters[b]) ? -1 : 1;
        }
    }
    return out;
}

Verdict transform_correctness() {
    double worst_fast = 0;
    for (unsigned n = 1; n <= 3; n++) {
        auto signs = sign_table(n);
        std::size_t len = std::size_t{1} << (2 * n);
        for (int trial = 0; trial < 100; trial++) {
            Rng rng = make_rng(derive_seed(kSeed, 1), n * 1000 + trial);
            auto channel = random_channel(n, rng);
            auto p = channel.error_rates();
            auto lambda = eigenvalues_from_error_rates(p);
            for (std::size_t b = 0; b < len; b++) {
                double naive = 0;
                for (std::size_t a = 0; a < len; a++) {
                    naive += p[a] * signs[a * len + b];
                }
                worst_fast = std::max(worst_fast, std::abs(naive - lambda[b]));
            }
        }
    }
    double worst_round = 0;
    for (unsigned n = 1; n <= 6; n++) {
        Rng rng = make_rng(derive_seed(kSeed, 1), 99000 + n);
        auto channel = random_channel(n, rng);
        auto back = error_rates_from_eigenvalues(eigenvalues_from_error_rates(channel.error_rates()));
        for (std::size_t a = 0; a < back.size(); a++) {
            worst_round = std::max(worst_round, std::abs(back[a] - channel.error_rates()[a]));
        }
    }
    return {worst_fast <= 1e-10 && worst_round <= 1e-12,
            "max |fast - naive| = " + fmt(worst_fast) + " (tol 1e-10), max round-trip error = " + fmt(worst_round) +
                " (tol 1e-12)"};
}

// Eigenvalues of the coarse hypothesis built without the library's eps0 range
// check, so that out-of-range strengths reach validation.
PauliChannel raw_coarse(unsigned n, const std::vector<std::uint64_t> &block, int sign, double eps0) {
    std::vector<double> lambda(pauli_count(n), 0.0);
    lambda[0] = 1;
    for (auto b : block) {
        lambda[b] = sign * eps0 / static_cast<double>(block.size());
    }
    return PauliChannel::from_eigenvalues(lambda);
}

Verdict channel_family_validity() {
    const double valid_eps[] = {0.1, 1.0 / 3, 1.0};
    std::size_t checked = 0;
    std::size_t wrong = 0;
    auto check_block = [&](unsigned n, const std::vector<std::uint64_t> &block) {
        for (double eps0 : valid_eps) {
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                bool ok = block.size() == 1
                              ? validate(make_hypothesis_channel(n, PauliString::from_index(n, block[0]), s, eps0))
                                    .valid()
                              : validate(make_coarse_hypothesis_channel(n, block, s, eps0)).valid();
                wrong += !ok;
                checked++;
            }
        }
        // At 1.01 the pair (+, -) is never physical: lambda_{a,+-} leaves
        // [-1, 1] pointwise, and p_0 = 4^-n (1 - 1.01) < 0 for the minus sign.
        bool plus = validate(raw_coarse(n, block, 1, 1.01)).valid();
        bool minus = validate(raw_coarse(n, block, -1, 1.01)).valid();
        bool fails = block.size() == 1 ? (!plus && !minus) : !minus;
        wrong += !fails;
        checked++;
    };
    for (unsigned n = 1; n <= 3; n++) {
        for (std::uint64_t a = 1; a < pauli_count(n); a++) {
            check_block(n, {a});
        }
    }
    // Every block at n <= 2, and blocks of random partitions at n = 3.
    for (unsigned n = 1; n <= 2; n++) {
        std::uint64_t m = pauli_count(n) - 1;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); mask++) {
            if (std::popcount(mask) < 2) {
                continue;
            }
            std::vector<std::uint64_t> block;
            for (std::uint64_t i = 0; i < m; i++) {
                if (mask >> i & 1) {
                    block.push_back(i + 1);
                }
            }
            check_block(n, block);
        }
    }
    for (int t = 0; t < 200; t++) {
        Rng rng = make_rng(derive_seed(kSeed, 2), t);
        auto partition = Partition::random(3, 1 + t % 16, rng);
        for (const auto &block : partition.blocks()) {
            if (block.size() > 1) {
                check_block(3, block);
            }
        }
    }
    bool rejects = false;
    try {
        make_hypothesis_channel(1, PauliString::from_letters("X"), Sign::Plus, 1.01);
    } catch (const std::invalid_argument &) {
        rejects = true;
    }
    return {wrong == 0 && rejects, std::to_string(checked) + " (family, eps0) cases, " + std::to_string(wrong) +
                                       " misclassified; constructor rejects eps0 = 1.01: " +
                                       (rejects ? "yes" : "no")};
}

Verdict ea_fidelity_free() {
    bool count_ok = true;
    for (unsigned w = 0; w <= 10; w++) {
        count_ok = count_ok && ea_sample_count(0.1, kDelta, w, 0.0) == 359;
    }
    const int reps = 300;
    const unsigned n = 2;
    std::vector<int> failures(pauli_count(n), 0);
    for (int r = 0; r < reps; r++) {
        Rng rng = make_rng(derive_seed(kSeed, 3), r);
        auto channel = random_channel(n, rng);
        auto samples = bell_samples(channel, 0.0, 359, rng);
        for (std::uint64_t b = 1; b < pauli_count(n); b++) {
            failures[b] += std::abs(ea_estimate(samples, b, n, 0.0) - channel.eigenvalues()[b]) > 0.1;
        }
    }
    double worst = *std::max_element(failures.begin(), failures.end()) / static_cast<double>(reps);
    double sigma = std::sqrt(kDelta * (1 - kDelta) / reps);
    double limit = kDelta + 4 * sigma;
    return {count_ok && worst <= limit, "sample count 359 for |b| in 0..10: " + std::string(count_ok ? "yes" : "no") +
                                            "; worst per-target failure rate " + fmt(worst) + " (limit " +
                                            fmt(limit) + ")"};
}

Verdict ea_unbiasedness() {
    double worst = 0;
    for (unsigned n = 1; n <= 3; n++) {
        auto signs = sign_table(n);
        std::size_t len = pauli_count(n);
        auto rates = oracles::random_error_rates(n, derive_seed(kSeed, 40 + n));
        auto truth = oracles::eigenvalues_by_ptm(rates);
        for (double p : {0.0, 0.05, 0.1}) {
            auto dist = oracles::bell_distribution_by_convolution(rates, p);
            for (std::size_t b = 0; b < len; b++) {
                double scale = std::pow(1 - p, -2.0 * index_ops::weight(b));
                double mean = 0;
                for (std::size_t a = 0; a < len; a++) {
                    mean += dist[a] * signs[a * len + b] * scale;
                }
                worst = std::max(worst, std::abs(mean - truth[b]));
            }
            // The library's closed form must agree with the convolution.
            auto exact = bell_outcome_distribution_exact(PauliChannel::from_error_rates(rates), p);
            for (std::size_t a = 0; a < len; a++) {
                worst = std::max(worst, std::abs(exact[a] - dist[a]));
            }
        }
    }
    return {worst <= 1e-12, "max |E[estimate] - lambda_b| = " + fmt(worst) + " (tol 1e-12)"};
}

Verdict crossover_previous_95() {
    auto r = crossover(0.95, 0.1, kDelta, CrossoverVariant::Previous);
    unsigned n = r.n_cross.value_or(0);
    return {r.n_cross && n >= 85, "previous bound crosses at n = " + (r.n_cross ? std::to_string(n) : "none") +
                                      " (need >= 85)"};
}

Verdict crossover_improved_25() {
    auto r = crossover(0.95, 0.1, kDelta, CrossoverVariant::Improved);
    double ratio = r.advantage(25);
    return {ratio >= 1e5, "improved / ea_upper at n = 25 is " + fmt(ratio) + " (need >= 1e5); improved crosses at n = " +
                              (r.n_cross ? std::to_string(*r.n_cross) : "none")};
}

Verdict crossover_90() {
    auto prev = crossover(0.9, 0.1, kDelta, CrossoverVariant::Previous);
    auto imp = crossover(0.9, 0.1, kDelta, CrossoverVariant::Improved);
    return {!prev.n_cross && imp.n_cross.has_value(),
            "previous: " + (prev.n_cross ? std::to_string(*prev.n_cross) : std::string("no crossover")) +
                " for n <= " + std::to_string(kCrossoverScanLimit) +
                "; improved: " + (imp.n_cross ? "n = " + std::to_string(*imp.n_cross) : std::string("none"))};
}

Verdict constant_check() {
    double worst_ratio = INFINITY;
    for (unsigned n = 5; n <= 100; n++) {
        double lb = ef_lower_bound(n, 0.1, LowerBoundMode::Exact);
        worst_ratio = std::min(worst_ratio, lb / (0.01 * std::pow(2.0, n) / 0.01));
    }
    double f = f_of(0.2);
    return {worst_ratio >= 1 && std::abs(f - 13.33) < 0.01,
            "min over n of exact / (0.01 2^n / eps^2) = " + fmt(worst_ratio) + ", f(0.2) = " + fmt(f)};
}

Verdict inequality_certification() {
    const double eps_values[] = {0.1, 0.2, 1.0 / 3};
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::size_t small_steps = 0;
    double min_slack = INFINITY;
    for (unsigned n = 1; n <= 2; n++) {
        int count = n == 1 ? 500 : 100;
        for (int i = 0; i < count; i++) {
            Rng rng = make_rng(derive_seed(kSeed, 7), n * 10000 + i);
            unsigned depth = 1 + i % 3;
            double eps0 = eps_values[(i / 3) % 3];
            auto policy = random_policy(n, depth, rng);
            for (FamilyKind kind : {FamilyKind::Pointwise, FamilyKind::Coarse}) {
                auto family = kind == FamilyKind::Pointwise
                                  ? HypothesisFamily::pointwise(n, eps0)
                                  : HypothesisFamily::coarse(Partition::random(n, 3, rng), eps0);
                auto r = certify_inequality(policy, family);
                checked++;
                violations += !r.holds;
                min_slack = std::min(min_slack, r.slack);
                if (r.min_step_factor < kStepFactorWarning) {
                    small_steps++;
                    std::fprintf(stderr, "note: criterion 7 n=%u policy %d has step factor %g\n", n, i,
                                 r.min_step_factor);
                }
            }
        }
    }
    return {violations == 0, std::to_string(checked) + " certifications, " + std::to_string(violations) +
                                 " violations, min slack " + fmt(min_slack) + ", " + std::to_string(small_steps) +
                                 " with step factor < " + fmt(kStepFactorWarning)};
}

Verdict mu_equivalence() {
    double worst = 0;
    std::size_t nodes = 0;
    for (int i = 0; i < 100; i++) {
        Rng rng = make_rng(derive_seed(kSeed, 8), i);
        auto policy = random_policy(1, 3, rng);
        double eps0 = 0.1 + 0.9 * (i % 10) / 9.0;
        for (std::uint64_t a = 1; a < 4; a++) {
            auto r = mu_trajectory_check(policy, a, eps0);
            worst = std::max(worst, r.max_deviation);
            nodes += r.nodes;
        }
    }
    return {worst < 1e-10, "max deviation " + fmt(worst) + " over " + std::to_string(nodes) + " nodes (tol 1e-10)"};
}

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

Verdict separable_equivalence() {
    double worst_forward = 0;
    double worst_backward = 0;
    for (int i = 0; i < 50; i++) {
        Rng rng = make_rng(derive_seed(kSeed, 9), i);
        unsigned depth = 1 + i % 3;
        auto sep = random_separable_scheme(1 + (i / 3) % 2, depth, rng);
        auto compiled = compile_separable_to_cma(sep);

        RandomPolicyOptions opts;
        opts.max_outcomes = 2;
        unsigned n = i % 5 == 4 ? 2 : 1;
        auto policy = random_policy(n, n == 2 ? std::min(depth, 2u) : depth, rng, opts);
        auto back = compile_cma_to_separable(policy);

        for (int c = 0; c < 5; c++) {
            auto channel1 = random_channel(1, rng);
            auto direct = run_separable_exact(sep, channel1);
            auto via = marginalize_final(run_scheme_exact(compiled.policy, channel1), compiled.final_outcome_to_k);
            worst_forward = std::max(worst_forward, max_difference(direct, via));

            auto channel = random_channel(n, rng);
            std::map<Outcome, double> encoded;
            for (const auto &[h, p] : run_scheme_exact(policy, channel)) {
                encoded[back.encode(h)] += p;
            }
            worst_backward = std::max(worst_backward, max_difference(encoded, run_separable_exact(back.scheme, channel)));
        }
    }
    return {worst_forward <= 1e-9 && worst_backward <= 1e-9,
            "separable -> memory-assisted max diff " + fmt(worst_forward) + ", memory-assisted -> separable " +
                fmt(worst_backward) + " (tol 1e-9)"};
}

Verdict ancilla_free_scaling() {
    bool ok = true;
    std::ostringstream detail;
    for (unsigned n = 1; n <= 3; n++) {
        auto cover = commuting_cover(n, CoverStrategy::Greedy);
        validate_cover(n, cover);
        std::size_t expected = (std::size_t{1} << n) + 1;
        // Counting bound: each group holds 2^n - 1 of the 4^n - 1 Paulis.
        std::size_t counting = (pauli_count(n) - 1 + (std::size_t{1} << n) - 2) / ((std::size_t{1} << n) - 1);
        bool minimal = cover.size() == counting;
        if (n <= 2) {
            minimal = minimal && cover.size() == oracles::minimum_cover_size_exhaustive(n);
        }
        const int reps = 100;
        std::uint64_t total = 0;
        std::vector<int> failures(pauli_count(n), 0);
        for (int r = 0; r < reps; r++) {
            Rng rng = make_rng(derive_seed(kSeed, 10), n * 1000 + r);
            auto channel = random_channel(n, rng);
            auto est = af_estimate_all(channel, 0.1, kDelta, cover, rng);
            total = est.total_shots;
            for (std::uint64_t a = 1; a < pauli_count(n); a++) {
                failures[a] += std::abs(est.estimates[a] - channel.eigenvalues()[a]) > 0.1;
            }
        }
        double worst = *std::max_element(failures.begin(), failures.end()) / static_cast<double>(reps);
        double limit = kDelta + 4 * std::sqrt(kDelta * (1 - kDelta) / reps);
        bool row_ok = cover.size() == expected && minimal && total == expected * 359 && worst <= limit;
        ok = ok && row_ok;
        detail << "n=" << n << ": " << cover.size() << " groups, " << total << " shots, failure rate " << fmt(worst)
               << (n < 3 ? "; " : "");
    }
    return {ok, detail.str()};
}

Verdict game_sanity() {
    const unsigned n = 2;
    const double eps0 = 0.3;
    const std::uint64_t trials = 1000;
    std::uint64_t shots = ea_sample_count(eps0 / 2, kDelta, n, 0.0);
    EntanglementAssistedPlayer ea(shots, 0.0);
    auto r = lecam_game(n, eps0, ea, trials, derive_seed(kSeed, 11));
    IgnorePlayer ignore;
    auto z = lecam_game(n, eps0, ignore, trials, derive_seed(kSeed, 111));
    double sigma_half = std::sqrt(0.25 / trials);
    bool ok = r.success_rate() >= 2.0 / 3 - 4 * r.standard_error() &&
              std::abs(z.success_rate() - 0.5) <= 4 * sigma_half;
    return {ok, "ea (" + std::to_string(shots) + " shots) wins " + fmt(r.success_rate()) + " (need >= " +
                    fmt(2.0 / 3 - 4 * r.standard_error()) + "), ignore wins " + fmt(z.success_rate()) +
                    " (need 0.5 +- " + fmt(4 * sigma_half) + ")"};
}

Verdict crossovers() {
    Verdict parts[] = {crossover_previous_95(), crossover_improved_25(), crossover_90()};
    const char *labels[] = {"(a) ", "; (b) ", "; (c) "};
    Verdict out{true, ""};
    for (int i = 0; i < 3; i++) {
        out.pass = out.pass && parts[i].pass;
        out.detail += labels[i] + std::string(parts[i].pass ? "pass: " : "FAIL: ") + parts[i].detail;
    }
    return out;
}

struct Criterion {
    std::string id;
    std::string name;
    double time_limit_s;
    std::function<Verdict()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1", "transform correctness", 10, transform_correctness},
        {"2", "channel-family validity", 5, channel_family_validity},
        {"3", "ea fidelity-free case", 60, ea_fidelity_free},
        {"4", "ea unbiasedness under noise", 30, ea_unbiasedness},
        {"5", "bound crossovers", 1, crossovers},
        {"6", "constant check", 1, constant_check},
        {"7", "averaged TVD inequality", 600, inequality_certification},
        {"8", "mu-recurrence equivalence", 60, mu_equivalence},
        {"9", "separable / memory-assisted equivalence", 120, separable_equivalence},
        {"10", "ancilla-free scaling", 120, ancilla_free_scaling},
        {"11", "game sanity", 300, game_sanity},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.time_limit_s;
        bool pass = out.pass && in_time;
        failed += !pass;
        std::printf("%s criterion %s (%s): %s [%.2f s, limit %g s%s]\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                    c.name.c_str(), out.detail.c_str(), seconds, c.time_limit_s, in_time ? "" : ", too slow");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
