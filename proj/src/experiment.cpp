#include "imatch/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "imatch/d1.hpp"
#include "imatch/hybrid.hpp"
#include "imatch/json_io.hpp"
#include "imatch/stability.hpp"

namespace imatch {

namespace {

int hybrid_m(int n) { return n + static_cast<int>(std::ceil(10.0 * std::log2(n))); }

ValueKind model_kind(ExperimentKind experiment) {
    switch (experiment) {
        case ExperimentKind::OrderedTwoPoint: return ValueKind::TwoPointOrdered;
        case ExperimentKind::D1Replay: return ValueKind::FixedMatrices;
        default: return ValueKind::BilateralUniform;
    }
}

int resolve_threads(int configured) {
    int threads = configured;
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? static_cast<int>(hw) : 1;
    }
    if (const char* env = std::getenv("IM_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) threads = std::min(threads, cap);
    }
    return std::max(threads, 1);
}

// Runs body(0..count-1) on worker threads; any exception is rethrown once
// all workers have stopped.
void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& worker : pool) worker.join();
    if (failure) std::rethrow_exception(failure);
}

double mean_of(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

double std_of(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += (x - mean) * (x - mean);
    return std::sqrt(sum / static_cast<double>(xs.size() - 1));
}

struct TrialOutcome {
    TrialRow row;
    bool replay_exact = true;
};

TrialOutcome execute_trial(const ExperimentConfig& config, const Instance& inst, int trial) {
    const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(trial);
    Rng rng(derive_stream(seed, kRunStream));

    RunOptions options;
    options.tie_break = config.tie_break;
    if (config.almost_equivalent_argmax) {
        options.argmax.treat_uninterviewed_as_ceiling = true;
        options.argmax.ceiling = inst.model.almost_params().high_threshold;
    }

    RunResult result = [&] {
        switch (config.algorithm) {
            case Algorithm::Hybrid: return run_hybrid(inst, rng, options);
            case Algorithm::FullyParallel: return run_fully_parallel(inst, rng, options);
            default: return run_sequential(inst, rng, options);
        }
    }();

    TrialOutcome outcome;
    TrialRow& row = outcome.row;
    row.experiment = to_string(config.experiment);
    row.n = inst.n;
    row.m = inst.m;
    row.trial = trial;
    row.seed = seed;
    row.algorithm = to_string(config.algorithm);
    row.total_interviews = result.metrics.total_interviews;
    row.interviews_per_applicant =
        static_cast<double>(result.metrics.total_interviews) / inst.n;
    int max_agent = 0;
    for (int c : result.metrics.per_applicant_interviews) max_agent = std::max(max_agent, c);
    for (int c : result.metrics.per_position_interviews) max_agent = std::max(max_agent, c);
    row.max_agent_interviews = max_agent;
    row.rounds = result.metrics.total_rounds;
    row.phase1_rounds = result.metrics.phase1_rounds;
    row.phase2_rounds = result.metrics.phase2_rounds;
    row.fallback = result.metrics.fallback_triggered;

    const StabilityReport report = check_interim_stability(inst, result.ledger, result.matching);
    row.stable = report.is_interim_stable;
    row.all_like_match = report.uninterviewed_matched_pairs.empty() &&
                         all_applicants_like_match(inst, result.ledger, result.matching);

    const InterimMode mode = config.experiment == ExperimentKind::D1Replay
                                 ? InterimMode::FullInterim
                                 : InterimMode::RealizedOnly;
    const auto [decoupled, decoupled_report] = decoupled_da(inst, result.ledger, mode);
    row.decoupled_stable = decoupled_report.is_interim_stable;

    if (config.experiment == ExperimentKind::D1Replay) {
        std::vector<std::pair<int, int>> sequence;
        sequence.reserve(result.ledger.records().size());
        for (const InterviewRecord& rec : result.ledger.records())
            sequence.emplace_back(rec.applicant, rec.position);
        bool exact = sequence == d1_expected_interviews();
        for (const auto& [i, j] : d1_expected_matching())
            exact = exact && result.matching.position_of(i) == j;
        for (const auto& [i, j] : d1_expected_decoupled())
            exact = exact && decoupled.position_of(i) == j;
        exact = exact && !decoupled_report.is_interim_stable;
        const auto& uninterviewed = decoupled_report.uninterviewed_matched_pairs;
        exact = exact && std::find(uninterviewed.begin(), uninterviewed.end(),
                                   std::make_pair(4, 3)) != uninterviewed.end();
        outcome.replay_exact = exact;
    }
    return outcome;
}

SizeStats aggregate(const std::vector<TrialRow>& rows, std::size_t begin, std::size_t end) {
    SizeStats stats;
    stats.n = rows[begin].n;
    stats.m = rows[begin].m;
    stats.trials = static_cast<int>(end - begin);
    std::vector<double> ipa, rounds, max_agent;
    long stable = 0, fallback = 0, premise = 0, decoupled = 0;
    stats.min_rounds = rows[begin].rounds;
    for (std::size_t r = begin; r < end; ++r) {
        const TrialRow& row = rows[r];
        ipa.push_back(row.interviews_per_applicant);
        rounds.push_back(static_cast<double>(row.rounds));
        max_agent.push_back(static_cast<double>(row.max_agent_interviews));
        stats.min_rounds = std::min(stats.min_rounds, row.rounds);
        stats.max_rounds = std::max(stats.max_rounds, row.rounds);
        stats.max_max_agent_interviews =
            std::max(stats.max_max_agent_interviews, row.max_agent_interviews);
        stats.mean_total_interviews += static_cast<double>(row.total_interviews);
        stable += row.stable;
        fallback += row.fallback;
        premise += row.all_like_match;
        decoupled += row.decoupled_stable;
    }
    stats.mean_interviews_per_applicant = mean_of(ipa);
    stats.std_interviews_per_applicant = std_of(ipa, stats.mean_interviews_per_applicant);
    stats.min_interviews_per_applicant = *std::min_element(ipa.begin(), ipa.end());
    stats.max_interviews_per_applicant = *std::max_element(ipa.begin(), ipa.end());
    stats.mean_total_interviews /= static_cast<double>(stats.trials);
    stats.mean_rounds = mean_of(rounds);
    stats.std_rounds = std_of(rounds, stats.mean_rounds);
    stats.mean_max_agent_interviews = mean_of(max_agent);
    stats.stability_rate = static_cast<double>(stable) / stats.trials;
    stats.fallback_rate = static_cast<double>(fallback) / stats.trials;
    stats.premise_rate = static_cast<double>(premise) / stats.trials;
    stats.decoupled_stable_rate = static_cast<double>(decoupled) / stats.trials;
    return stats;
}

}  // namespace

const char* to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Fig3Bilateral: return "fig3-bilateral";
        case ExperimentKind::OrderedTwoPoint: return "ordered-two-point";
        case ExperimentKind::HybridRounds: return "hybrid-rounds";
        case ExperimentKind::FullyParallelRounds: return "fully-parallel-rounds";
        case ExperimentKind::Decoupling: return "decoupling";
        case ExperimentKind::D1Replay: return "d1-replay";
        case ExperimentKind::LowerBoundContrapositive: return "lower-bound-contrapositive";
    }
    return "unknown";
}

const char* to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Sequential: return "sequential";
        case Algorithm::Hybrid: return "hybrid";
        case Algorithm::FullyParallel: return "fully-parallel";
    }
    return "unknown";
}

ExperimentKind experiment_from_name(const std::string& name) {
    for (ExperimentKind kind :
         {ExperimentKind::Fig3Bilateral, ExperimentKind::OrderedTwoPoint,
          ExperimentKind::HybridRounds, ExperimentKind::FullyParallelRounds,
          ExperimentKind::Decoupling, ExperimentKind::D1Replay,
          ExperimentKind::LowerBoundContrapositive})
        if (name == to_string(kind)) return kind;
    throw std::invalid_argument("unknown experiment: " + name);
}

Algorithm algorithm_from_name(const std::string& name) {
    for (Algorithm algorithm :
         {Algorithm::Sequential, Algorithm::Hybrid, Algorithm::FullyParallel})
        if (name == to_string(algorithm)) return algorithm;
    throw std::invalid_argument("unknown algorithm: " + name);
}

ExperimentConfig default_config(ExperimentKind kind) {
    ExperimentConfig config;
    config.experiment = kind;
    switch (kind) {
        case ExperimentKind::Fig3Bilateral:
            config.n_values = {10, 25, 50, 100, 200};
            break;
        case ExperimentKind::OrderedTwoPoint:
            config.n_values = {8, 16, 32, 64};
            break;
        case ExperimentKind::HybridRounds:
            config.n_values = {128};
            config.m_rule = MRule::NPlus10LogN;
            config.algorithm = Algorithm::Hybrid;
            break;
        case ExperimentKind::FullyParallelRounds:
            config.n_values = {16, 32, 64, 128};
            config.algorithm = Algorithm::FullyParallel;
            break;
        case ExperimentKind::Decoupling:
            config.n_values = {100};
            config.trials = 200;
            break;
        case ExperimentKind::D1Replay:
            config.n_values = {5};
            config.trials = 1;
            break;
        case ExperimentKind::LowerBoundContrapositive:
            config.n_values = {5};
            config.trials = 1000;
            break;
    }
    return config;
}

AggregateStats run_experiment(const ExperimentConfig& config) {
    if (config.n_values.empty()) throw std::invalid_argument("no sizes configured");
    if (config.trials < 1) throw std::invalid_argument("trials must be positive");
    if (config.m_rule == MRule::Explicit && config.m_values.size() != config.n_values.size())
        throw std::invalid_argument("explicit m values must pair up with n values");

    const int threads = resolve_threads(config.threads);
    AggregateStats stats;
    stats.experiment = config.experiment;

    for (std::size_t size = 0; size < config.n_values.size(); ++size) {
        const int n = config.n_values[size];
        int m = n;
        if (config.m_rule == MRule::NPlus10LogN)
            m = hybrid_m(n);
        else if (config.m_rule == MRule::Explicit)
            m = config.m_values[size];

        std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
        if (config.experiment == ExperimentKind::D1Replay) {
            const Instance inst = load_instance(config.fixture_path);
            parallel_for(config.trials, threads,
                         [&](int trial) { outcomes[trial] = execute_trial(config, inst, trial); });
        } else {
            parallel_for(config.trials, threads, [&](int trial) {
                const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(trial);
                const Instance inst =
                    generate_instance(model_kind(config.experiment), n, m, config.params, seed);
                outcomes[trial] = execute_trial(config, inst, trial);
            });
        }

        const std::size_t begin = stats.rows.size();
        for (TrialOutcome& outcome : outcomes) {
            stats.all_stable = stats.all_stable && outcome.row.stable;
            stats.replay_exact = stats.replay_exact && outcome.replay_exact;
            stats.rows.push_back(std::move(outcome.row));
        }
        stats.per_size.push_back(aggregate(stats.rows, begin, stats.rows.size()));
    }

    if (!config.output_path.empty()) {
        write_file(config.output_path + ".csv", rows_to_csv(stats.rows));
        write_file(config.output_path + ".json", stats_to_json(stats));
    }
    return stats;
}

std::string rows_to_csv(const std::vector<TrialRow>& rows) {
    std::ostringstream out;
    out << "experiment,n,m,trial,seed,algorithm,total_interviews,interviews_per_applicant,"
           "max_agent_interviews,rounds,phase1_rounds,phase2_rounds,fallback,stable,"
           "all_like_match,decoupled_stable\n";
    char ipa[32];
    for (const TrialRow& row : rows) {
        std::snprintf(ipa, sizeof ipa, "%.6f", row.interviews_per_applicant);
        out << row.experiment << ',' << row.n << ',' << row.m << ',' << row.trial << ','
            << row.seed << ',' << row.algorithm << ',' << row.total_interviews << ',' << ipa << ','
            << row.max_agent_interviews << ',' << row.rounds << ',' << row.phase1_rounds << ','
            << row.phase2_rounds << ',' << static_cast<int>(row.fallback) << ','
            << static_cast<int>(row.stable) << ',' << static_cast<int>(row.all_like_match) << ','
            << static_cast<int>(row.decoupled_stable) << '\n';
    }
    return out.str();
}

std::string stats_to_json(const AggregateStats& stats) {
    nlohmann::ordered_json out;
    out["experiment"] = to_string(stats.experiment);
    out["all_stable"] = stats.all_stable;
    if (stats.experiment == ExperimentKind::D1Replay) out["replay_exact"] = stats.replay_exact;
    nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
    for (const SizeStats& s : stats.per_size) {
        sizes.push_back({{"n", s.n},
                         {"m", s.m},
                         {"trials", s.trials},
                         {"mean_interviews_per_applicant", s.mean_interviews_per_applicant},
                         {"std_interviews_per_applicant", s.std_interviews_per_applicant},
                         {"min_interviews_per_applicant", s.min_interviews_per_applicant},
                         {"max_interviews_per_applicant", s.max_interviews_per_applicant},
                         {"mean_total_interviews", s.mean_total_interviews},
                         {"mean_rounds", s.mean_rounds},
                         {"std_rounds", s.std_rounds},
                         {"min_rounds", s.min_rounds},
                         {"max_rounds", s.max_rounds},
                         {"mean_max_agent_interviews", s.mean_max_agent_interviews},
                         {"max_max_agent_interviews", s.max_max_agent_interviews},
                         {"stability_rate", s.stability_rate},
                         {"fallback_rate", s.fallback_rate},
                         {"premise_rate", s.premise_rate},
                         {"decoupled_stable_rate", s.decoupled_stable_rate}});
    }
    out["sizes"] = std::move(sizes);
    return out.dump(2) + "\n";
}

}  // namespace imatch
