#pragma once

#include <utility>
#include <vector>

#include "imatch/da.hpp"
#include "imatch/instance.hpp"
#include "imatch/ledger.hpp"
#include "imatch/matching.hpp"

namespace imatch {

// Outcome of a stability audit. A matching is interim stable when every
// matched pair has interviewed and no pair would rather be together than
// with their assigned partners under interim utilities.
struct StabilityReport {
    bool is_interim_stable = true;
    std::vector<std::pair<int, int>> uninterviewed_matched_pairs;  // 0-based
    std::vector<std::pair<int, int>> blocking_pairs;               // 0-based
};

// Exhaustive scan over all n*m pairs.
StabilityReport check_interim_stability(const Instance& inst, const InterviewLedger& ledger,
                                        const Matching& matching);

// Runs deferred acceptance from scratch on preferences read off the ledger
// (ignoring how the ledger was produced) and audits the result.
std::pair<Matching, StabilityReport> decoupled_da(const Instance& inst,
                                                  const InterviewLedger& ledger, InterimMode mode);

// True when every matched applicant realized strictly more than her prior
// for her assigned position. Unmatched applicants are ignored; a matched
// pair that never interviewed is a precondition violation.
bool all_applicants_like_match(const Instance& inst, const InterviewLedger& ledger,
                               const Matching& matching);

}  // namespace imatch
