// Command line front end: Monte Carlo experiment runner, deterministic fixture
// replay, and a stability audit for instance/matching/ledger files.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "imatch/experiment.hpp"
#include "imatch/hybrid.hpp"
#include "imatch/json_io.hpp"
#include "imatch/stability.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUnstable = 1;
constexpr int kConfigError = 2;

int run_command(const std::string& experiment_name, const std::vector<int>& ns,
                const std::vector<int>& ms, const std::string& m_rule, int trials,
                std::uint64_t seed, const std::string& algorithm_name,
                const std::string& variant, const std::string& tie_break, int threads,
                const std::string& fixture, const std::string& out) {
    imatch::ExperimentConfig config =
        imatch::default_config(imatch::experiment_from_name(experiment_name));
    if (!ns.empty()) config.n_values = ns;
    if (!ms.empty()) {
        config.m_rule = imatch::MRule::Explicit;
        config.m_values = ms;
    } else if (m_rule == "equal") {
        config.m_rule = imatch::MRule::Equal;
    } else if (m_rule == "n-plus-10logn") {
        config.m_rule = imatch::MRule::NPlus10LogN;
    } else if (!m_rule.empty()) {
        throw std::invalid_argument("unknown m rule: " + m_rule);
    }
    if (trials > 0) config.trials = trials;
    config.base_seed = seed;
    if (!algorithm_name.empty()) config.algorithm = imatch::algorithm_from_name(algorithm_name);
    if (variant == "fully-parallel")
        config.algorithm = imatch::Algorithm::FullyParallel;
    else if (!variant.empty())
        throw std::invalid_argument("unknown variant: " + variant);
    if (tie_break == "unmatched-first")
        config.tie_break = imatch::TieBreakRule::UnmatchedThenNotLiking;
    else if (!tie_break.empty() && tie_break != "lowest-score")
        throw std::invalid_argument("unknown tie break: " + tie_break);
    config.threads = threads;
    if (!fixture.empty()) config.fixture_path = fixture;
    config.output_path = out;

    const imatch::AggregateStats stats = imatch::run_experiment(config);
    for (const imatch::SizeStats& s : stats.per_size) {
        std::printf("n=%d m=%d trials=%d interviews/applicant=%.4f rounds=%.2f stable=%.4f\n",
                    s.n, s.m, s.trials, s.mean_interviews_per_applicant, s.mean_rounds,
                    s.stability_rate);
    }
    if (!out.empty()) std::printf("wrote %s.csv and %s.json\n", out.c_str(), out.c_str());
    if (!stats.all_stable || !stats.replay_exact) {
        std::fprintf(stderr, "stability violation detected\n");
        return kUnstable;
    }
    return kOk;
}

int replay_command(const std::string& fixture, const std::string& trace_path,
                   const std::string& out_prefix, bool quiet) {
    const imatch::Instance inst = imatch::load_instance(fixture);
    imatch::Rng rng(imatch::derive_stream(0, imatch::kRunStream));
    imatch::RunOptions options;
    options.collect_trace = true;
    const imatch::RunResult result = imatch::run_sequential(inst, rng, options);

    const std::string jsonl = imatch::trace_to_jsonl(*result.trace);
    if (!trace_path.empty())
        imatch::write_file(trace_path, jsonl);
    else if (!quiet)
        std::cout << jsonl;
    std::cout << imatch::matching_to_json(result.matching);
    const imatch::StabilityReport report =
        imatch::check_interim_stability(inst, result.ledger, result.matching);
    std::cout << imatch::stability_report_to_json(report);
    if (!out_prefix.empty()) {
        imatch::write_file(out_prefix + ".matching.json",
                           imatch::matching_to_json(result.matching));
        imatch::write_file(out_prefix + ".ledger.json", imatch::ledger_to_json(result.ledger));
    }
    return report.is_interim_stable ? kOk : kUnstable;
}

int check_command(const std::string& instance_path, const std::string& matching_path,
                  const std::string& ledger_path) {
    const imatch::Instance inst = imatch::load_instance(instance_path);
    const imatch::Matching matching = imatch::load_matching(matching_path);
    const imatch::InterviewLedger ledger = imatch::load_ledger(ledger_path);
    const imatch::StabilityReport report = imatch::check_interim_stability(inst, ledger, matching);
    std::cout << imatch::stability_report_to_json(report);
    return report.is_interim_stable ? kOk : kUnstable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interview scheduling and matching experiments"};
    app.require_subcommand(1);

    std::string experiment = "fig3-bilateral";
    std::vector<int> ns, ms;
    std::string m_rule, algorithm, variant, tie_break, out;
    std::string fixture = "fixtures/d1.json";
    int trials = 0;
    int threads = 0;
    std::uint64_t seed = 0;

    CLI::App* run = app.add_subcommand("run", "Run a Monte Carlo experiment");
    run->add_option("--experiment", experiment, "Experiment name");
    run->add_option("--n", ns, "Applicant counts")->delimiter(',');
    run->add_option("--m", ms, "Position counts (explicit, paired with --n)")->delimiter(',');
    run->add_option("--m-rule", m_rule, "equal or n-plus-10logn");
    run->add_option("--trials", trials, "Trials per size");
    run->add_option("--seed", seed, "Base seed; trial t uses seed + t");
    run->add_option("--algorithm", algorithm, "sequential, hybrid, or fully-parallel");
    run->add_option("--variant", variant, "fully-parallel");
    run->add_option("--tie-break", tie_break, "lowest-score or unmatched-first");
    run->add_option("--threads", threads, "Worker threads (IM_THREADS caps this)");
    run->add_option("--fixture", fixture, "Fixture path for d1-replay");
    run->add_option("--out", out, "Output base path for CSV and JSON summary");

    std::string replay_fixture = "fixtures/d1.json", trace_path, out_prefix;
    bool quiet = false;
    CLI::App* replay = app.add_subcommand("replay", "Replay a fixed-matrix fixture");
    replay->add_option("--fixture", replay_fixture, "Instance fixture JSON");
    replay->add_option("--trace", trace_path, "Write the JSONL trace here instead of stdout");
    replay->add_option("--out", out_prefix, "Also write <prefix>.matching.json and <prefix>.ledger.json");
    replay->add_flag("--quiet", quiet, "Suppress the stdout trace");

    std::string instance_path, matching_path, ledger_path;
    CLI::App* check = app.add_subcommand("check", "Audit a matching for interim stability");
    check->add_option("--instance", instance_path, "Instance JSON")->required();
    check->add_option("--matching", matching_path, "Matching JSON")->required();
    check->add_option("--ledger", ledger_path, "Interview ledger JSON")->required();

    try {
        app.parse(argc, argv);
        if (run->parsed())
            return run_command(experiment, ns, ms, m_rule, trials, seed, algorithm, variant,
                               tie_break, threads, fixture, out);
        if (replay->parsed()) return replay_command(replay_fixture, trace_path, out_prefix, quiet);
        if (check->parsed()) return check_command(instance_path, matching_path, ledger_path);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kConfigError;
    }
    return kConfigError;
}
