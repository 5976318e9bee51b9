#include "imatch/sequential.hpp"

#include <stdexcept>
#include <utility>

namespace imatch {

namespace {

bool position_likes(const Instance& inst, const InterviewLedger& ledger, int position,
                    int applicant) {
    const InterviewRecord* rec = ledger.find(applicant, position);
    return rec && rec->u > inst.model.prior_u(position, applicant);
}

// Picks the target position among the applicant's best candidates (ascending
// index, so the first hit wins residual ties).
int select_position(const Instance& inst, const InterviewLedger& ledger, const Matching& matching,
                    const std::vector<int>& candidates, TieBreakRule rule) {
    int best = -1;
    int best_class = 0;
    double best_score = 0.0;
    for (int j : candidates) {
        const int holder = matching.applicant_of(j);
        int cls;
        double score = 0.0;
        if (rule == TieBreakRule::LowestMatchScore) {
            // Unmatched counts strictly below every match value.
            cls = holder < 0 ? 0 : 1;
            if (holder >= 0) score = position_interim(inst, ledger, j, holder);
        } else {
            if (holder < 0)
                cls = 0;
            else if (!position_likes(inst, ledger, j, holder))
                cls = 1;
            else
                cls = 2;
        }
        if (best < 0 || cls < best_class ||
            (cls == best_class && rule == TieBreakRule::LowestMatchScore && cls == 1 &&
             score < best_score)) {
            best = j;
            best_class = cls;
            best_score = score;
        }
    }
    return best;
}

void check_initial(const Instance& inst, const InitialState& state) {
    if (state.matching.n() != inst.n || state.matching.m() != inst.m ||
        state.ledger.n() != inst.n || state.ledger.m() != inst.m ||
        state.rejections.n() != inst.n || state.rejections.m() != inst.m)
        throw std::invalid_argument("initial state dimensions do not match the instance");
    for (int i = 0; i < inst.n; ++i) {
        const int j = state.matching.position_of(i);
        if (j >= 0 && state.rejections.contains(i, j))
            throw std::invalid_argument("initial state matches a rejected pair");
    }
}

}  // namespace

RunResult run_sequential(const Instance& inst, Rng& rng, const RunOptions& options,
                         const InitialState* initial) {
    if (initial) check_initial(inst, *initial);
    Matching matching = initial ? initial->matching : Matching(inst.n, inst.m);
    InterviewLedger ledger = initial ? initial->ledger : InterviewLedger(inst.n, inst.m);
    RejectionSet rejections = initial ? initial->rejections : RejectionSet(inst.n, inst.m);

    std::vector<TraceEvent> trace;
    long iter = options.iter_offset;
    long rounds = 0;

    for (;;) {
        // Lowest-index applicant who is unmatched and still acceptable somewhere.
        int i = -1;
        for (int a = 0; a < inst.n; ++a) {
            if (!matching.applicant_matched(a) && !rejections.all_rejected(a)) {
                i = a;
                break;
            }
        }
        if (i < 0) break;
        ++iter;

        const std::vector<int> candidates =
            argmax_positions(inst, ledger, rejections, i, options.argmax);
        const int j = select_position(inst, ledger, matching, candidates, options.tie_break);
        const int holder = matching.applicant_of(j);
        const bool wants_i = holder < 0 || position_interim(inst, ledger, j, i) >
                                               position_interim(inst, ledger, j, holder);
        const bool interviewed = ledger.contains(i, j);

        if (!interviewed && wants_i) {
            const InterviewRecord& rec = conduct_interview(inst, ledger, rng, i, j);
            ++rounds;
            if (options.collect_trace)
                trace.push_back({iter, EventKind::Interview, i, j, rec.v, rec.u,
                                 options.trace_phase, options.round_offset + rounds});
        } else if (!wants_i) {
            rejections.add(i, j);
            if (options.collect_trace)
                trace.push_back({iter,
                                 interviewed ? EventKind::ProposalReject
                                             : EventKind::RejectWithoutInterview,
                                 i, j, std::nullopt, std::nullopt, options.trace_phase,
                                 options.round_offset + rounds});
        } else {
            // She has interviewed here and the position wants her: displace
            // any current holder (who is thereby rejected) and match.
            if (holder >= 0) {
                matching.unmatch_position(j);
                rejections.add(holder, j);
            }
            matching.pair(i, j);
            if (options.collect_trace)
                trace.push_back({iter, EventKind::ProposalAccept, i, j, std::nullopt, std::nullopt,
                                 options.trace_phase, options.round_offset + rounds});
        }
    }

    RunResult result{std::move(matching), std::move(ledger), std::move(rejections), {}, {}};
    result.metrics.total_interviews = result.ledger.size();
    result.metrics.total_rounds = rounds;
    result.metrics.per_applicant_interviews.assign(inst.n, 0);
    result.metrics.per_position_interviews.assign(inst.m, 0);
    for (const InterviewRecord& rec : result.ledger.records()) {
        ++result.metrics.per_applicant_interviews[rec.applicant];
        ++result.metrics.per_position_interviews[rec.position];
    }
    for (int a = 0; a < inst.n; ++a)
        if (result.rejections.all_rejected(a)) ++result.metrics.fully_rejected_applicants;
    if (options.collect_trace) result.trace = std::move(trace);
    return result;
}

}  // namespace imatch
