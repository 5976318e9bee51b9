#pragma once

#include <optional>

#include "imatch/instance.hpp"
#include "imatch/interim.hpp"
#include "imatch/run_result.hpp"

namespace imatch {

// How a tie between equally attractive positions is resolved when the
// sequential engine picks where an applicant goes next.
enum class TieBreakRule {
    // Position whose current match has the lowest interim value, unmatched
    // positions counting strictly below every value; remaining ties go to the
    // lowest index.
    LowestMatchScore,
    // Unmatched positions first, then positions that do not interim like
    // their current match, then the rest; lowest index inside each class.
    UnmatchedThenNotLiking,
};

struct RunOptions {
    TieBreakRule tie_break = TieBreakRule::LowestMatchScore;
    ArgmaxOptions argmax;
    bool collect_trace = false;

    // Used by the batched engines when they delegate to the sequential loop.
    int trace_phase = 0;
    long round_offset = 0;
    long iter_offset = 0;
};

// A consistent snapshot to continue from: dimensions must match the instance
// and no matched pair may sit in the rejection set.
struct InitialState {
    Matching matching;
    InterviewLedger ledger;
    RejectionSet rejections;
};

// One-interview-at-a-time engine: repeatedly takes the lowest-index unmatched
// applicant some position could still take, sends her to the most attractive
// position willing to consider her, and either interviews, matches, or
// records a rejection. Runs until every applicant is matched or rejected
// everywhere.
RunResult run_sequential(const Instance& inst, Rng& rng, const RunOptions& options = {},
                         const InitialState* initial = nullptr);

}  // namespace imatch
