#include "imatch/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "imatch/bipartite.hpp"
#include "imatch/da.hpp"

namespace imatch {

namespace {

RunMetrics finish_metrics(const Instance& inst, const InterviewLedger& ledger,
                          const RejectionSet& rejections, long phase1, long phase2, long phase3,
                          bool fallback) {
    RunMetrics metrics;
    metrics.total_interviews = ledger.size();
    metrics.total_rounds = phase1 + phase2 + phase3;
    metrics.phase1_rounds = phase1;
    metrics.phase2_rounds = phase2;
    metrics.phase3_rounds = phase3;
    metrics.fallback_triggered = fallback;
    metrics.phase_boundaries = std::vector<long>{phase1};
    metrics.per_applicant_interviews.assign(inst.n, 0);
    metrics.per_position_interviews.assign(inst.m, 0);
    for (const InterviewRecord& rec : ledger.records()) {
        ++metrics.per_applicant_interviews[rec.applicant];
        ++metrics.per_position_interviews[rec.position];
    }
    for (int a = 0; a < inst.n; ++a)
        if (rejections.all_rejected(a)) ++metrics.fully_rejected_applicants;
    return metrics;
}

DaEventHook make_hook(std::vector<TraceEvent>* trace, long* iter, int phase, long round) {
    if (!trace) return {};
    return [trace, iter, phase, round](EventKind kind, int applicant, int position) {
        trace->push_back({++*iter, kind, applicant, position, std::nullopt, std::nullopt, phase,
                          round});
    };
}

// Interviews every missing pair on full realized information and rebuilds the
// matching from scratch with deferred acceptance. The rejections produced by
// that clean run replace the interim-phase ones.
RunResult full_information_fallback(const Instance& inst, Rng& rng, InterviewLedger ledger,
                                    long phase1, std::vector<TraceEvent>* trace, long* iter) {
    all_interviews(inst, ledger, rng, trace, phase1, iter ? *iter : 0);
    if (iter && trace && !trace->empty()) *iter = trace->back().iter;
    RejectionSet rejections(inst.n, inst.m);
    const PreferenceProfile profile =
        build_interim_profile(inst, ledger, InterimMode::FullInterim);
    Matching matching =
        applicant_proposing_da(profile, Matching(inst.n, inst.m), rejections,
                               make_hook(trace, iter ? iter : nullptr, 3, phase1 + inst.m));
    RunMetrics metrics = finish_metrics(inst, ledger, rejections, phase1, 0, inst.m, true);
    RunResult result{std::move(matching), std::move(ledger), std::move(rejections),
                     std::move(metrics), {}};
    if (trace) result.trace = std::move(*trace);
    return result;
}

}  // namespace

InterviewBatch pick_next_interviews(const Instance& inst, const InterviewLedger& ledger,
                                    const Matching& matching, const RejectionSet& rejections,
                                    const std::vector<int>& applicants,
                                    const ArgmaxOptions& options) {
    std::vector<int> free_positions;
    std::vector<int> slot_of(inst.m, -1);
    for (int j = 0; j < inst.m; ++j) {
        if (!matching.position_matched(j)) {
            slot_of[j] = static_cast<int>(free_positions.size());
            free_positions.push_back(j);
        }
    }
    std::vector<std::vector<int>> adjacency(applicants.size());
    for (std::size_t a = 0; a < applicants.size(); ++a) {
        for (int j : argmax_positions(inst, ledger, rejections, applicants[a], options)) {
            if (slot_of[j] >= 0 && !ledger.contains(applicants[a], j))
                adjacency[a].push_back(slot_of[j]);
        }
    }
    const std::vector<int> match =
        max_bipartite_matching(adjacency, static_cast<int>(free_positions.size()));
    InterviewBatch batch;
    for (std::size_t a = 0; a < applicants.size(); ++a)
        if (match[a] >= 0) batch.pairs.emplace_back(applicants[a], free_positions[match[a]]);
    return batch;
}

void all_interviews(const Instance& inst, InterviewLedger& ledger, Rng& rng,
                    std::vector<TraceEvent>* trace, long round_offset, long iter_offset) {
    if (inst.m < inst.n)
        throw std::invalid_argument("all_interviews() needs at least as many positions as applicants");
    long iter = iter_offset;
    for (int l = 0; l < inst.m; ++l) {
        for (int i = 0; i < inst.n; ++i) {
            const int j = (i + l) % inst.m;
            if (ledger.contains(i, j)) continue;
            const InterviewRecord& rec = conduct_interview(inst, ledger, rng, i, j);
            if (trace)
                trace->push_back({++iter, EventKind::Interview, i, j, rec.v, rec.u, 3,
                                  round_offset + l + 1});
        }
    }
}

RunResult run_hybrid(const Instance& inst, Rng& rng, const RunOptions& options) {
    if (inst.m < inst.n)
        throw std::invalid_argument("run_hybrid() needs at least as many positions as applicants");

    const int budget = std::max(static_cast<int>(std::ceil(10.0 * std::log2(inst.n))),
                                inst.m - inst.n + 1);
    const int cutoff = std::min(inst.n, inst.m - (budget - 1));

    Matching matching(inst.n, inst.m);
    InterviewLedger ledger(inst.n, inst.m);
    RejectionSet rejections(inst.n, inst.m);
    std::vector<TraceEvent> trace;
    std::vector<TraceEvent>* sink = options.collect_trace ? &trace : nullptr;
    long iter = 0;
    long phase1 = 0;

    for (;;) {
        std::vector<int> pending;
        for (int a = 0; a < cutoff; ++a)
            if (!matching.applicant_matched(a) && !rejections.all_rejected(a)) pending.push_back(a);
        if (pending.empty()) break;

        const InterviewBatch batch =
            pick_next_interviews(inst, ledger, matching, rejections, pending, options.argmax);
        if (batch.pairs.size() != pending.size())
            return full_information_fallback(inst, rng, std::move(ledger), phase1, sink, &iter);

        ++phase1;
        ++iter;
        for (const auto& [a, p] : batch.pairs) {
            const InterviewRecord& rec = conduct_interview(inst, ledger, rng, a, p);
            if (sink)
                sink->push_back({iter, EventKind::Interview, a, p, rec.v, rec.u, 1, phase1});
        }
        matching = truncated_da(inst, ledger, std::move(matching), rejections,
                                make_hook(sink, &iter, 1, phase1));
    }

    // Remaining applicants go one at a time from the state reached so far.
    RunOptions tail = options;
    tail.trace_phase = 2;
    tail.round_offset = phase1;
    tail.iter_offset = iter;
    const InitialState seed{std::move(matching), std::move(ledger), std::move(rejections)};
    RunResult result = run_sequential(inst, rng, tail, &seed);

    const long phase2 = result.metrics.total_rounds;
    result.metrics = finish_metrics(inst, result.ledger, result.rejections, phase1, phase2, 0, false);
    if (options.collect_trace) {
        if (result.trace) trace.insert(trace.end(), result.trace->begin(), result.trace->end());
        result.trace = std::move(trace);
    }
    return result;
}

RunResult run_fully_parallel(const Instance& inst, Rng& rng, const RunOptions& options) {
    if (inst.m < inst.n)
        throw std::invalid_argument(
            "run_fully_parallel() needs at least as many positions as applicants");

    Matching matching(inst.n, inst.m);
    InterviewLedger ledger(inst.n, inst.m);
    RejectionSet rejections(inst.n, inst.m);
    std::vector<TraceEvent> trace;
    std::vector<TraceEvent>* sink = options.collect_trace ? &trace : nullptr;
    long iter = 0;
    long rounds = 0;

    for (;;) {
        std::vector<int> pending;
        for (int a = 0; a < inst.n; ++a)
            if (!matching.applicant_matched(a) && !rejections.all_rejected(a)) pending.push_back(a);
        if (pending.empty()) break;

        // First serve applicants with unmatched targets, then let the rest
        // meet matched positions that would strictly prefer them.
        InterviewBatch batch =
            pick_next_interviews(inst, ledger, matching, rejections, pending, options.argmax);
        std::vector<char> covered(inst.n, 0);
        for (const auto& [a, p] : batch.pairs) covered[a] = 1;

        std::vector<int> uncovered;
        for (int a : pending)
            if (!covered[a]) uncovered.push_back(a);
        std::vector<int> busy_positions;
        std::vector<int> slot_of(inst.m, -1);
        for (int j = 0; j < inst.m; ++j) {
            if (matching.position_matched(j)) {
                slot_of[j] = static_cast<int>(busy_positions.size());
                busy_positions.push_back(j);
            }
        }
        std::vector<std::vector<int>> adjacency(uncovered.size());
        for (std::size_t a = 0; a < uncovered.size(); ++a) {
            const int i = uncovered[a];
            for (int j : argmax_positions(inst, ledger, rejections, i, options.argmax)) {
                if (slot_of[j] < 0 || ledger.contains(i, j)) continue;
                const int holder = matching.applicant_of(j);
                if (position_interim(inst, ledger, j, i) >
                    position_interim(inst, ledger, j, holder))
                    adjacency[a].push_back(slot_of[j]);
            }
        }
        const std::vector<int> extra =
            max_bipartite_matching(adjacency, static_cast<int>(busy_positions.size()));
        for (std::size_t a = 0; a < uncovered.size(); ++a)
            if (extra[a] >= 0) batch.pairs.emplace_back(uncovered[a], busy_positions[extra[a]]);
        std::sort(batch.pairs.begin(), batch.pairs.end());

        if (batch.pairs.empty())
            return full_information_fallback(inst, rng, std::move(ledger), rounds, sink, &iter);

        ++rounds;
        ++iter;
        for (const auto& [a, p] : batch.pairs) {
            const InterviewRecord& rec = conduct_interview(inst, ledger, rng, a, p);
            if (sink) sink->push_back({iter, EventKind::Interview, a, p, rec.v, rec.u, 1, rounds});
        }
        matching = truncated_da(inst, ledger, std::move(matching), rejections,
                                make_hook(sink, &iter, 1, rounds));
    }

    RunMetrics metrics = finish_metrics(inst, ledger, rejections, rounds, 0, 0, false);
    RunResult result{std::move(matching), std::move(ledger), std::move(rejections),
                     std::move(metrics), {}};
    if (options.collect_trace) result.trace = std::move(trace);
    return result;
}

}  // namespace imatch
