#pragma once

#include <utility>
#include <vector>

#include "imatch/sequential.hpp"

namespace imatch {

// One round of simultaneous interviews; pairs sorted by applicant index.
struct InterviewBatch {
    std::vector<std::pair<int, int>> pairs;
};

// Chooses the next round of interviews for the given applicants: each one is
// connected to her most attractive non-rejecting positions, restricted to
// currently unmatched positions and pairs that have not interviewed, and a
// maximum matching over that graph becomes the batch.
InterviewBatch pick_next_interviews(const Instance& inst, const InterviewLedger& ledger,
                                    const Matching& matching, const RejectionSet& rejections,
                                    const std::vector<int>& applicants,
                                    const ArgmaxOptions& options = {});

// Round-robin schedule that interviews every missing pair in m rounds.
// Requires m >= n so no agent interviews twice in one round.
void all_interviews(const Instance& inst, InterviewLedger& ledger, Rng& rng,
                    std::vector<TraceEvent>* trace = nullptr, long round_offset = 0,
                    long iter_offset = 0);

// Batched engine for markets with at least as many positions as applicants:
// a leading block of applicants interviews in parallel rounds interleaved
// with truncated deferred acceptance, the sequential engine finishes the
// rest, and a full-information fallback handles rounds where the batch
// cannot cover everyone.
RunResult run_hybrid(const Instance& inst, Rng& rng, const RunOptions& options = {});

// Fully parallel variant: every unmatched applicant interviews each round
// when capacity allows, preferring unmatched positions and then matched
// positions willing to meet her. Same fallback as run_hybrid; no stability
// guarantee is claimed for intermediate rounds, but final output is checked
// by the same stability tooling.
RunResult run_fully_parallel(const Instance& inst, Rng& rng, const RunOptions& options = {});

}  // namespace imatch
