#pragma once

#include <functional>
#include <vector>

#include "imatch/instance.hpp"
#include "imatch/ledger.hpp"
#include "imatch/matching.hpp"
#include "imatch/rejections.hpp"
#include "imatch/trace.hpp"

namespace imatch {

inline constexpr int kUnmatched = -1;

// Strict preferences driving a deferred-acceptance round. Applicant lists may
// be truncated; the position comparator must induce a strict order over
// applicants with kUnmatched strictly worst.
struct PreferenceProfile {
    // applicant_orders[i]: positions in strictly decreasing preference, 0-based.
    std::vector<std::vector<int>> applicant_orders;
    // prefers(position, a, b): position strictly prefers applicant a over b.
    std::function<bool(int position, int a, int b)> position_prefers;
};

// Callback for proposal outcomes (kind is ProposalAccept or ProposalReject).
using DaEventHook = std::function<void(EventKind kind, int applicant, int position)>;

// Applicant-proposing deferred acceptance, continuing from the given
// matching. Unmatched applicants propose in ascending index down their lists,
// skipping positions in the rejection set; a position swaps only when it
// strictly prefers the proposer, and every rejection (including displacement)
// is recorded in `rejections`, which the caller may carry across calls.
Matching applicant_proposing_da(const PreferenceProfile& profile, Matching matching,
                                RejectionSet& rejections, const DaEventHook& hook = {});

enum class InterimMode {
    FullInterim,   // order all positions by interim utility
    RealizedOnly,  // order only interviewed positions by realized value
};

// Preference profile induced by the current ledger. The returned profile
// keeps references to `inst` and `ledger`; both must outlive it.
PreferenceProfile build_interim_profile(const Instance& inst, const InterviewLedger& ledger,
                                        InterimMode mode);

// Deferred acceptance on interim preferences truncated at each applicant's
// most preferred position she has not interviewed yet: she only lists
// positions she values strictly above that pivot, all of which she has
// interviewed. Applicants who have interviewed everything keep full lists.
Matching truncated_da(const Instance& inst, const InterviewLedger& ledger, Matching matching,
                      RejectionSet& rejections, const DaEventHook& hook = {});

}  // namespace imatch
