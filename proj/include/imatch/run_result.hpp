#pragma once

#include <optional>
#include <vector>

#include "imatch/ledger.hpp"
#include "imatch/matching.hpp"
#include "imatch/rejections.hpp"
#include "imatch/trace.hpp"

namespace imatch {

struct RunMetrics {
    long total_interviews = 0;
    // Every interview accounts for one round in the sequential engine; the
    // batched engines count one round per conducted batch.
    long total_rounds = 0;
    std::vector<int> per_applicant_interviews;
    std::vector<int> per_position_interviews;
    long phase1_rounds = 0;
    long phase2_rounds = 0;
    long phase3_rounds = 0;
    std::optional<std::vector<long>> phase_boundaries;
    bool fallback_triggered = false;
    int fully_rejected_applicants = 0;
};

struct RunResult {
    Matching matching;
    InterviewLedger ledger;
    RejectionSet rejections;
    RunMetrics metrics;
    std::optional<std::vector<TraceEvent>> trace;
};

}  // namespace imatch
