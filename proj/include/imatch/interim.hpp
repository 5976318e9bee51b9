#pragma once

#include <optional>
#include <vector>

#include "imatch/ids.hpp"
#include "imatch/instance.hpp"
#include "imatch/ledger.hpp"
#include "imatch/rejections.hpp"

namespace imatch {

// Interim utilities: the realized value when the pair has interviewed, the
// prior expectation otherwise. These two are the index-based views every
// engine works with.
double applicant_interim(const Instance& inst, const InterviewLedger& ledger, int applicant,
                         int position);
double position_interim(const Instance& inst, const InterviewLedger& ledger, int position,
                        int applicant);

// AgentId-level operations with validation. `target` in interim_utility and
// interim_likes must be on the opposite side of `viewer`; a disengaged
// optional stands for Unmatched.
double interim_utility(const Instance& inst, const InterviewLedger& ledger, AgentId viewer,
                       AgentId target);
bool interim_prefers(const Instance& inst, const InterviewLedger& ledger, AgentId viewer,
                     std::optional<AgentId> first, std::optional<AgentId> second);
bool interim_likes(const Instance& inst, const InterviewLedger& ledger, AgentId viewer,
                   AgentId target);

// Samples both values for the pair and appends the record. Interviewing the
// same pair twice is a precondition violation.
const InterviewRecord& conduct_interview(const Instance& inst, InterviewLedger& ledger, Rng& rng,
                                         int applicant, int position);

// How the per-applicant argmax over positions is computed.
struct ArgmaxOptions {
    // When set, positions the applicant has not interviewed count as worth
    // `ceiling` during the argmax, and ties inside the argmax set are broken
    // by the original prior expectations instead of going straight to the
    // index order.
    bool treat_uninterviewed_as_ceiling = false;
    double ceiling = 0.0;
};

// Positions with maximal interim utility for the applicant, excluding
// positions that rejected her. Ascending index order; empty only when every
// position rejected her.
std::vector<int> argmax_positions(const Instance& inst, const InterviewLedger& ledger,
                                  const RejectionSet& rejections, int applicant,
                                  const ArgmaxOptions& options = {});

}  // namespace imatch
