#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imatch/generate.hpp"
#include "imatch/sequential.hpp"

namespace imatch {

enum class ExperimentKind {
    Fig3Bilateral,
    OrderedTwoPoint,
    HybridRounds,
    FullyParallelRounds,
    Decoupling,
    D1Replay,
    LowerBoundContrapositive,
};

enum class Algorithm { Sequential, Hybrid, FullyParallel };

enum class MRule { Equal, NPlus10LogN, Explicit };

const char* to_string(ExperimentKind kind);
const char* to_string(Algorithm algorithm);
ExperimentKind experiment_from_name(const std::string& name);
Algorithm algorithm_from_name(const std::string& name);

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Fig3Bilateral;
    std::vector<int> n_values;
    MRule m_rule = MRule::Equal;
    std::vector<int> m_values;  // parallel to n_values when m_rule == Explicit
    int trials = 100;
    std::uint64_t base_seed = 0;
    Algorithm algorithm = Algorithm::Sequential;
    TieBreakRule tie_break = TieBreakRule::LowestMatchScore;
    bool almost_equivalent_argmax = false;
    GenerateParams params;
    std::string fixture_path = "fixtures/d1.json";
    std::string output_path;  // base path; CSV and JSON summary get suffixes
    int threads = 0;          // 0: IM_THREADS env var, else hardware default
};

// Fills n_values, trials, algorithm, and model defaults for the experiment.
ExperimentConfig default_config(ExperimentKind kind);

// One CSV row.
struct TrialRow {
    std::string experiment;
    int n = 0;
    int m = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    long total_interviews = 0;
    double interviews_per_applicant = 0.0;
    int max_agent_interviews = 0;
    long rounds = 0;
    long phase1_rounds = 0;
    long phase2_rounds = 0;
    bool fallback = false;
    bool stable = false;
    bool all_like_match = false;
    bool decoupled_stable = false;
};

struct SizeStats {
    int n = 0;
    int m = 0;
    int trials = 0;
    double mean_interviews_per_applicant = 0.0;
    double std_interviews_per_applicant = 0.0;
    double min_interviews_per_applicant = 0.0;
    double max_interviews_per_applicant = 0.0;
    double mean_total_interviews = 0.0;
    double mean_rounds = 0.0;
    double std_rounds = 0.0;
    long min_rounds = 0;
    long max_rounds = 0;
    double mean_max_agent_interviews = 0.0;
    int max_max_agent_interviews = 0;
    double stability_rate = 0.0;
    double fallback_rate = 0.0;
    double premise_rate = 0.0;  // share of trials where every applicant likes her match
    double decoupled_stable_rate = 0.0;
};

struct AggregateStats {
    ExperimentKind experiment = ExperimentKind::Fig3Bilateral;
    std::vector<SizeStats> per_size;
    std::vector<TrialRow> rows;
    bool all_stable = true;
    // D1Replay only: exact interview sequence, final matching, and decoupled
    // audit all matched the frozen expectations.
    bool replay_exact = true;
};

// Runs the configured Monte Carlo experiment. Trials are distributed over
// worker threads but seeded and emitted by trial index, so the CSV is
// byte-identical for identical configs regardless of scheduling.
AggregateStats run_experiment(const ExperimentConfig& config);

std::string rows_to_csv(const std::vector<TrialRow>& rows);
std::string stats_to_json(const AggregateStats& stats);

}  // namespace imatch
