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

#include "commands.h"

#include <omp.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "paulilearn/bounds.h"
#include "paulilearn/channel_io.h"
#include "paulilearn/cover.h"
#include "paulilearn/format.h"
#include "paulilearn/lecam_game.h"
#include "paulilearn/protocols.h"
#include "paulilearn/random_scheme.h"
#include "paulilearn/scheme_io.h"
#include "paulilearn/tvd_oracle.h"

namespace paulilearn::cli {

namespace {

[[noreturn]] void usage_error(const std::string &message) {
    throw CLI::ValidationError(message);
}

void apply_threads(const GlobalOptions &global) {
    if (global.threads > 0) {
        omp_set_num_threads(global.threads);
    }
}

/// Writes to the named file, or to stdout when the path is empty or "-".
class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw std::runtime_error("cannot write " + path);
            }
        }
    }
    std::ostream &stream() {
        return file_ ? *file_ : std::cout;
    }

   private:
    std::unique_ptr<std::ofstream> file_;
};

std::string json_text(const nlohmann::json &j) {
    return j.dump(2) + "\n";
}

// Noise on the Bell-pair preparation from either flag; p = 0 by default.
double noise_from(const std::optional<double> &p_depol, const std::optional<double> &fidelity) {
    if (p_depol && fidelity) {
        usage_error("--p-depol and --bell-fidelity are mutually exclusive");
    }
    if (fidelity) {
        return p_from_fidelity(*fidelity);
    }
    if (p_depol) {
        if (!(*p_depol >= 0 && *p_depol < 1)) {
            usage_error("--p-depol must lie in [0, 1)");
        }
        return *p_depol;
    }
    return 0;
}

std::string block_label(unsigned n, const std::vector<std::uint64_t> &block) {
    std::string out;
    for (std::uint64_t b : block) {
        if (!out.empty()) {
            out += '+';
        }
        out += PauliString::from_index(n, b).letters();
    }
    return out;
}

// ---------------------------------------------------------------- transform

struct TransformArgs {
    std::string input;
    std::string output;
    std::string to;
};

int run_transform(const TransformArgs &args) {
    auto loaded = read_channel_file(args.input);
    Representation target = args.to.empty() ? (loaded.representation == Representation::ErrorRates
                                                   ? Representation::Eigenvalues
                                                   : Representation::ErrorRates)
                                            : parse_representation(args.to);
    nlohmann::json j = channel_to_json(loaded.channel, target);
    j["validation"] = validity_to_json(loaded.report);
    Output out(args.output);
    out.stream() << json_text(j);
    return loaded.report.valid() ? 0 : 1;
}

// ----------------------------------------------------------------- validate

struct ValidateArgs {
    std::string channel;
    std::string scheme;
    std::string partition;
};

int run_validate(const ValidateArgs &args) {
    int given = !args.channel.empty() + !args.scheme.empty() + !args.partition.empty();
    if (given != 1) {
        usage_error("give exactly one of --channel, --scheme, --partition");
    }
    nlohmann::json report;
    if (!args.channel.empty()) {
        report = validity_to_json(read_channel_file(args.channel).report);
    } else {
        report["valid"] = true;
        report["failures"] = nlohmann::json::array();
        try {
            if (!args.scheme.empty()) {
                auto policy = read_policy_file(args.scheme);
                report["n"] = policy.n;
                report["depth"] = policy.depth;
                report["leaves"] = count_leaves(policy);
                report["measurements"] = count_measurements(policy);
            } else {
                auto partition = read_partition_file(args.partition);
                report["n"] = partition.num_qubits();
                report["blocks"] = partition.blocks().size();
                report["max_block_size"] = partition.max_block_size();
            }
        } catch (const std::invalid_argument &e) {
            report["valid"] = false;
            report["failures"].push_back(e.what());
        }
    }
    std::cout << json_text(report);
    return report["valid"].get<bool>() ? 0 : 1;
}

// ----------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string protocol;
    std::string channel;
    std::string partition;
    std::string cover = "greedy";
    std::string output;
    std::optional<std::uint64_t> shots;
    std::optional<double> eps;
    std::optional<double> delta;
    std::optional<double> p_depol;
    std::optional<double> fidelity;
    std::uint64_t repetitions = 1;
};

int run_simulate(const SimulateArgs &args, const GlobalOptions &global) {
    apply_threads(global);
    if (args.protocol != "ea" && args.protocol != "af" && args.protocol != "coarse") {
        usage_error("--protocol must be ea, af or coarse");
    }
    if (args.shots && (args.eps || args.delta)) {
        usage_error("--shots excludes --eps/--delta");
    }
    if (!args.shots && !(args.eps && args.delta)) {
        usage_error("give --shots, or both --eps and --delta");
    }
    if (args.protocol != "ea" && (args.p_depol || args.fidelity)) {
        usage_error("--p-depol and --bell-fidelity apply to the ea protocol only");
    }
    if (args.protocol != "coarse" && !args.partition.empty()) {
        usage_error("--partition applies to the coarse protocol only");
    }
    double p = noise_from(args.p_depol, args.fidelity);

    auto loaded = read_channel_file(args.channel);
    if (!loaded.report.valid()) {
        throw std::invalid_argument("channel file " + args.channel + " is not a valid Pauli channel");
    }
    const PauliChannel &channel = loaded.channel;
    unsigned n = channel.num_qubits();
    auto truth = channel.eigenvalues();

    std::vector<CommutingGroup> cover;
    std::optional<Partition> partition;
    if (args.protocol != "ea") {
        cover = commuting_cover(n, parse_cover_strategy(args.cover));
    }
    if (args.protocol == "coarse") {
        partition = args.partition.empty() ? Partition::singletons(n) : read_partition_file(args.partition);
        if (partition->num_qubits() != n) {
            throw std::invalid_argument("partition and channel qubit counts differ");
        }
    }

    Output out(args.output);
    out.stream() << EstimateRecord::csv_header() << "\n";
    for (std::uint64_t r = 0; r < args.repetitions; r++) {
        std::uint64_t stream_seed = derive_seed(global.seed, r);
        Rng rng(stream_seed);
        EstimateRecord rec;
        rec.protocol = args.protocol;
        rec.n = n;
        rec.seed = stream_seed;
        if (args.protocol == "ea") {
            std::uint64_t shots = args.shots ? *args.shots : ea_sample_count(*args.eps, *args.delta, n, p);
            ErrorSampler errors(channel);
            std::vector<std::uint64_t> samples(shots);
            for (auto &s : samples) {
                s = bell_sample(errors, p, rng);
            }
            rec.shots = shots;
            for (std::uint64_t b = 1; b < pauli_count(n); b++) {
                rec.target = PauliString::from_index(n, b).letters();
                rec.estimate = ea_estimate(samples, b, n, p);
                rec.truth = truth[b];
                out.stream() << rec.csv_row() << "\n";
            }
        } else if (args.protocol == "af") {
            auto est = args.shots ? af_estimate_all(channel, *args.shots, cover, rng)
                                  : af_estimate_all(channel, *args.eps, *args.delta, cover, rng);
            for (std::uint64_t a = 1; a < pauli_count(n); a++) {
                rec.target = PauliString::from_index(n, a).letters();
                rec.shots = est.shots_per_pauli[a];
                rec.estimate = est.estimates[a];
                rec.truth = truth[a];
                out.stream() << rec.csv_row() << "\n";
            }
        } else {
            std::uint64_t shots = args.shots ? *args.shots : af_group_shots(*args.eps, *args.delta);
            auto est = coarse_estimate(channel, *partition, shots, cover, rng);
            rec.shots = shots;
            for (std::size_t i = 0; i < est.size(); i++) {
                const auto &block = partition->blocks()[i];
                rec.target = block_label(n, block);
                rec.estimate = est[i];
                rec.truth = geometric_mean_fidelity(channel, block);
                out.stream() << rec.csv_row() << "\n";
            }
        }
    }
    return 0;
}

// ------------------------------------------------------------------- bounds

struct BoundsArgs {
    std::string variant = "ef_exact";
    unsigned n = 1;
    double eps = 0.1;
    double delta = 1.0 / 3;
    std::optional<double> fidelity;
    std::optional<unsigned> block_size;
    bool json = false;
};

int run_bounds(const BoundsArgs &args) {
    BoundQuery q;
    q.variant = parse_bound_variant(args.variant);
    q.n = args.n;
    q.eps = args.eps;
    q.delta = args.delta;
    q.fidelity = args.fidelity;
    q.max_block_size = args.block_size;
    auto r = evaluate_bound(q);
    if (args.json) {
        nlohmann::json j;
        j["variant"] = bound_variant_name(q.variant);
        j["n"] = q.n;
        j["eps"] = q.eps;
        j["value"] = r.value;
        j["integer"] = r.integer;
        j["formula"] = r.formula;
        std::cout << json_text(j);
    } else {
        std::cout << format_double(r.value) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------------- curve

struct CurveArgs {
    std::string variant;
    double eps = 0.1;
    double delta = 1.0 / 3;
    double fidelity = 1.0;
    unsigned n_min = 1;
    unsigned n_max = 100;
    std::string output;
};

// Bounds too large for a double print as inf rather than aborting the table.
double bound_or_inf(BoundVariant v, unsigned n, const CurveArgs &args) {
    BoundQuery q;
    q.variant = v;
    q.n = n;
    q.eps = args.eps;
    q.delta = args.delta;
    q.fidelity = args.fidelity;
    try {
        return evaluate_bound(q).value;
    } catch (const std::overflow_error &) {
        return std::numeric_limits<double>::infinity();
    }
}

int run_curve(const CurveArgs &args) {
    if (args.n_min < 1 || args.n_max < args.n_min) {
        usage_error("need 1 <= --n-min <= --n-max");
    }
    std::vector<BoundVariant> columns;
    if (args.variant.empty()) {
        columns = {BoundVariant::EfExact, BoundVariant::EfPlotted, BoundVariant::AfPrevious, BoundVariant::EaUpper};
    } else {
        columns = {parse_bound_variant(args.variant)};
        if (columns[0] == BoundVariant::Coarse) {
            usage_error("curve does not support the coarse variant");
        }
    }
    Output out(args.output);
    std::string header = "n";
    for (auto v : columns) {
        header += "," + bound_variant_name(v);
    }
    out.stream() << header << "\n";
    for (unsigned n = args.n_min; n <= args.n_max; n++) {
        std::string row = std::to_string(n);
        for (auto v : columns) {
            row += "," + format_double(bound_or_inf(v, n, args));
        }
        out.stream() << row << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- crossover

struct CrossoverArgs {
    std::string variant = "improved";
    double eps = 0.1;
    double delta = 1.0 / 3;
    double fidelity = 1.0;
    std::optional<unsigned> at_n;
};

int run_crossover(const CrossoverArgs &args) {
    auto variant = parse_crossover_variant(args.variant);
    auto r = crossover(args.fidelity, args.eps, args.delta, variant);
    std::cout << "variant,bell_fidelity,eps,delta,n_cross,lower_rate,upper_rate,at_n,ratio\n";
    std::string row = args.variant + "," + format_double(args.fidelity) + "," + format_double(args.eps) + "," +
                      format_double(args.delta) + "," + (r.n_cross ? std::to_string(*r.n_cross) : "none") + "," +
                      format_double(r.lower_rate) + "," + format_double(r.upper_rate) + ",";
    if (args.at_n) {
        row += std::to_string(*args.at_n) + "," + format_double(r.advantage(*args.at_n));
    } else {
        row += ",";
    }
    std::cout << row << "\n";
    return 0;
}

// --------------------------------------------------------------------- game

struct GameArgs {
    std::string player = "ea";
    unsigned n = 1;
    double eps0 = 0.3;
    std::uint64_t trials = 1000;
    std::optional<std::uint64_t> shots;
    double delta = 1.0 / 3;
    std::optional<double> p_depol;
    std::optional<double> fidelity;
    std::string cover = "greedy";
    std::string output;
};

int run_game(const GameArgs &args, const GlobalOptions &global) {
    apply_threads(global);
    if (args.player != "ea" && (args.p_depol || args.fidelity)) {
        usage_error("--p-depol and --bell-fidelity apply to the ea player only");
    }
    double p = noise_from(args.p_depol, args.fidelity);
    std::unique_ptr<GamePlayer> player;
    std::uint64_t shots = 0;
    // Telling eps0 from 0 needs accuracy eps0 / 2 at the midpoint threshold.
    double eps = args.eps0 / 2;
    if (args.player == "truth") {
        player = std::make_unique<TruthPlayer>();
    } else if (args.player == "ignore") {
        player = std::make_unique<IgnorePlayer>();
    } else if (args.player == "ea") {
        shots = args.shots ? *args.shots : ea_sample_count(eps, args.delta, args.n, p);
        player = std::make_unique<EntanglementAssistedPlayer>(shots, p);
    } else if (args.player == "af") {
        shots = args.shots ? *args.shots : af_group_shots(eps, args.delta);
        player = std::make_unique<AncillaFreePlayer>(commuting_cover(args.n, parse_cover_strategy(args.cover)), shots);
    } else {
        usage_error("--player must be truth, ignore, ea or af");
    }
    auto r = lecam_game(args.n, args.eps0, *player, args.trials, global.seed);
    Output out(args.output);
    out.stream() << "player,n,eps0,shots,trials,successes,success_rate,standard_error,sign_accuracy,seed\n";
    out.stream() << args.player << "," << args.n << "," << format_double(args.eps0) << "," << shots << "," << r.trials
                 << "," << r.successes << "," << format_double(r.success_rate()) << ","
                 << format_double(r.standard_error()) << "," << format_double(r.sign_accuracy()) << "," << global.seed
                 << "\n";
    return 0;
}

// ---------------------------------------------------------------- tvd-check

struct TvdCheckArgs {
    unsigned n = 1;
    double eps0 = 0.2;
    std::string policies;
    std::string kind = "pointwise";
    std::string partition;
    std::optional<unsigned> depth;
    std::size_t block_size = 2;
    std::string output;
};

int run_tvd_check(const TvdCheckArgs &args, const GlobalOptions &global) {
    apply_threads(global);
    FamilyKind kind = parse_family_kind(args.kind);
    if (kind != FamilyKind::Coarse && !args.partition.empty()) {
        usage_error("--partition applies to --kind coarse only");
    }
    if (args.depth && (*args.depth < 1 || *args.depth > 3)) {
        usage_error("--depth must lie in [1, 3]");
    }

    const std::string prefix = "random:";
    bool random = args.policies.rfind(prefix, 0) == 0;
    std::vector<SchemePolicy> from_file;
    std::size_t count = 0;
    if (random) {
        try {
            count = std::stoull(args.policies.substr(prefix.size()));
        } catch (const std::exception &) {
            usage_error("--policies random:K needs an integer K");
        }
    } else {
        from_file = read_policy_list_file(args.policies);
        count = from_file.size();
    }

    std::optional<Partition> fixed_partition;
    if (!args.partition.empty()) {
        fixed_partition = read_partition_file(args.partition);
    }

    Output out(args.output);
    out.stream() << "policy_id,n,depth,n_meas,lhs,rhs,slack,holds,min_step_factor,seed\n";
    bool all_hold = true;
    for (std::size_t i = 0; i < count; i++) {
        Rng rng = make_rng(global.seed, i);
        SchemePolicy policy;
        if (random) {
            unsigned depth = args.depth ? *args.depth : std::uniform_int_distribution<unsigned>(1, 3)(rng);
            policy = random_policy(args.n, depth, rng);
        } else {
            policy = from_file[i];
        }
        HypothesisFamily family;
        if (kind == FamilyKind::Pointwise) {
            family = HypothesisFamily::pointwise(policy.n, args.eps0);
        } else {
            family = HypothesisFamily::coarse(
                fixed_partition ? *fixed_partition : Partition::random(policy.n, args.block_size, rng), args.eps0);
        }
        auto r = certify_inequality(policy, family);
        all_hold = all_hold && r.holds;
        if (r.min_step_factor < kStepFactorWarning) {
            nlohmann::json w;
            w["warning"] = "small step factor";
            w["policy_id"] = i;
            w["min_step_factor"] = r.min_step_factor;
            std::cerr << w.dump() << "\n";
        }
        out.stream() << i << "," << policy.n << "," << policy.depth << "," << r.n_meas << "," << format_double(r.lhs)
                     << "," << format_double(r.rhs) << "," << format_double(r.slack) << ","
                     << (r.holds ? "true" : "false") << "," << format_double(r.min_step_factor) << "," << global.seed
                     << "\n";
    }
    return all_hold ? 0 : 1;
}

}  // namespace

void register_commands(CLI::App &app, const GlobalOptions &global, int &exit_code) {
    {
        auto args = std::make_shared<TransformArgs>();
        auto *sub = app.add_subcommand("transform", "Convert a channel file between error rates and eigenvalues");
        sub->add_option("-i,--input", args->input, "Channel file")->required()->check(CLI::ExistingFile);
        sub->add_option("--to", args->to, "error_rates or eigenvalues (default: the other one)");
        sub->add_option("-o,--output", args->output, "Output file (default stdout)");
        sub->callback([args, &exit_code] { exit_code = run_transform(*args); });
    }
    {
        auto args = std::make_shared<ValidateArgs>();
        auto *sub = app.add_subcommand("validate", "Check a channel, scheme or partition file");
        sub->add_option("--channel", args->channel, "Channel file");
        sub->add_option("--scheme", args->scheme, "Scheme file");
        sub->add_option("--partition", args->partition, "Partition file");
        sub->callback([args, &exit_code] { exit_code = run_validate(*args); });
    }
    {
        auto args = std::make_shared<SimulateArgs>();
        auto *sub = app.add_subcommand("simulate", "Estimate eigenvalues with a learning protocol");
        sub->add_option("--protocol", args->protocol, "ea, af or coarse")->required();
        sub->add_option("--channel", args->channel, "Channel file")->required()->check(CLI::ExistingFile);
        sub->add_option("--shots", args->shots, "Channel uses (ea) or shots per group (af, coarse)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--eps", args->eps, "Target accuracy");
        sub->add_option("--delta", args->delta, "Failure probability");
        sub->add_option("--p-depol", args->p_depol, "Depolarizing strength on the Bell preparation");
        sub->add_option("--bell-fidelity", args->fidelity, "Bell-pair fidelity");
        sub->add_option("--repetitions", args->repetitions, "Independent repetitions")->capture_default_str();
        sub->add_option("--partition", args->partition, "Partition file (coarse; default singletons)");
        sub->add_option("--cover", args->cover, "greedy or product")->capture_default_str();
        sub->add_option("-o,--output", args->output, "Output CSV (default stdout)");
        sub->callback([args, &global, &exit_code] { exit_code = run_simulate(*args, global); });
    }
    {
        auto args = std::make_shared<BoundsArgs>();
        auto *sub = app.add_subcommand("bounds", "Evaluate one sample-complexity bound");
        sub->add_option("--variant", args->variant,
                        "ef_exact, ef_plotted, ef_simplified, coarse, af_previous or ea_upper")
            ->capture_default_str();
        sub->add_option("--n", args->n, "Qubits")->required();
        sub->add_option("--eps", args->eps, "Accuracy")->capture_default_str();
        sub->add_option("--delta", args->delta, "Failure probability (ea_upper)");
        sub->add_option("--bell-fidelity", args->fidelity, "Bell-pair fidelity (ea_upper)");
        sub->add_option("--block-size", args->block_size, "Largest block size C (coarse)");
        sub->add_flag("--json", args->json, "Print value, formula and flags as JSON");
        sub->callback([args, &exit_code] { exit_code = run_bounds(*args); });
    }
    {
        auto args = std::make_shared<CurveArgs>();
        auto *sub = app.add_subcommand("curve", "Tabulate bounds against n as CSV");
        sub->add_option("--variant", args->variant, "Single bound column instead of the full table");
        sub->add_option("--eps", args->eps, "Accuracy")->capture_default_str();
        sub->add_option("--delta", args->delta, "Failure probability");
        sub->add_option("--bell-fidelity", args->fidelity, "Bell-pair fidelity")->capture_default_str();
        sub->add_option("--n-min", args->n_min, "First n")->capture_default_str();
        sub->add_option("--n-max", args->n_max, "Last n")->capture_default_str();
        sub->add_option("-o,--output", args->output, "Output CSV (default stdout)");
        sub->callback([args, &exit_code] { exit_code = run_curve(*args); });
    }
    {
        auto args = std::make_shared<CrossoverArgs>();
        auto *sub = app.add_subcommand("crossover", "First n where a lower bound exceeds the ea upper bound");
        sub->add_option("--variant", args->variant, "previous or improved")->capture_default_str();
        sub->add_option("--eps", args->eps, "Accuracy")->capture_default_str();
        sub->add_option("--delta", args->delta, "Failure probability");
        sub->add_option("--bell-fidelity", args->fidelity, "Bell-pair fidelity")->capture_default_str();
        sub->add_option("--at-n", args->at_n, "Also report the bound ratio at this n");
        sub->callback([args, &exit_code] { exit_code = run_crossover(*args); });
    }
    {
        auto args = std::make_shared<GameArgs>();
        auto *sub = app.add_subcommand("game", "Play the partially revealed hypothesis-testing game");
        sub->add_option("--player", args->player, "truth, ignore, ea or af")->capture_default_str();
        sub->add_option("--n", args->n, "Qubits")->capture_default_str();
        sub->add_option("--eps0", args->eps0, "Perturbation strength")->capture_default_str();
        sub->add_option("--trials", args->trials, "Trials")->capture_default_str();
        sub->add_option("--shots", args->shots, "Shots for ea / per group for af (default from eps0/2, delta)");
        sub->add_option("--delta", args->delta, "Failure probability for the default shot count");
        sub->add_option("--p-depol", args->p_depol, "Depolarizing strength on the Bell preparation");
        sub->add_option("--bell-fidelity", args->fidelity, "Bell-pair fidelity");
        sub->add_option("--cover", args->cover, "greedy or product (af)")->capture_default_str();
        sub->add_option("-o,--output", args->output, "Output CSV (default stdout)");
        sub->callback([args, &global, &exit_code] { exit_code = run_game(*args, global); });
    }
    {
        auto args = std::make_shared<TvdCheckArgs>();
        auto *sub = app.add_subcommand("tvd-check", "Certify the averaged TVD inequality on explicit policies");
        sub->add_option("--n", args->n, "Qubits for random policies")->capture_default_str();
        sub->add_option("--eps0", args->eps0, "Perturbation strength (at most 1/3)")->capture_default_str();
        sub->add_option("--policies", args->policies, "Scheme file, or random:K")->required();
        sub->add_option("--kind", args->kind, "pointwise or coarse")->capture_default_str();
        sub->add_option("--partition", args->partition, "Partition file (coarse; default random per policy)");
        sub->add_option("--depth", args->depth, "Depth of random policies (default uniform in 1..3)");
        sub->add_option("--block-size", args->block_size, "Largest block of random partitions")
            ->capture_default_str();
        sub->add_option("-o,--output", args->output, "Output CSV (default stdout)");
        sub->callback([args, &global, &exit_code] { exit_code = run_tvd_check(*args, global); });
    }
}

}  // namespace paulilearn::cli
