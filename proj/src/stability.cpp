#include "imatch/stability.hpp"

#include <stdexcept>

#include "imatch/interim.hpp"

namespace imatch {

StabilityReport check_interim_stability(const Instance& inst, const InterviewLedger& ledger,
                                        const Matching& matching) {
    if (matching.n() != inst.n || matching.m() != inst.m || ledger.n() != inst.n ||
        ledger.m() != inst.m)
        throw std::invalid_argument("stability check dimensions do not match the instance");
    StabilityReport report;

    for (int i = 0; i < inst.n; ++i) {
        const int j = matching.position_of(i);
        if (j >= 0 && !ledger.contains(i, j)) report.uninterviewed_matched_pairs.emplace_back(i, j);
    }

    std::vector<double> holder_value(inst.m);
    for (int j = 0; j < inst.m; ++j) {
        const int holder = matching.applicant_of(j);
        if (holder >= 0) holder_value[j] = position_interim(inst, ledger, j, holder);
    }

    for (int i = 0; i < inst.n; ++i) {
        const int mine = matching.position_of(i);
        const double my_value = mine >= 0 ? applicant_interim(inst, ledger, i, mine) : 0.0;
        for (int j = 0; j < inst.m; ++j) {
            if (j == mine) continue;
            if (mine >= 0 && applicant_interim(inst, ledger, i, j) <= my_value) continue;
            const int holder = matching.applicant_of(j);
            if (holder >= 0 && position_interim(inst, ledger, j, i) <= holder_value[j]) continue;
            report.blocking_pairs.emplace_back(i, j);
        }
    }

    report.is_interim_stable =
        report.uninterviewed_matched_pairs.empty() && report.blocking_pairs.empty();
    return report;
}

std::pair<Matching, StabilityReport> decoupled_da(const Instance& inst,
                                                  const InterviewLedger& ledger,
                                                  InterimMode mode) {
    const PreferenceProfile profile = build_interim_profile(inst, ledger, mode);
    RejectionSet rejections(inst.n, inst.m);
    Matching matching =
        applicant_proposing_da(profile, Matching(inst.n, inst.m), rejections);
    StabilityReport report = check_interim_stability(inst, ledger, matching);
    return {std::move(matching), std::move(report)};
}

bool all_applicants_like_match(const Instance& inst, const InterviewLedger& ledger,
                               const Matching& matching) {
    for (int i = 0; i < inst.n; ++i) {
        const int j = matching.position_of(i);
        if (j < 0) continue;
        const InterviewRecord* rec = ledger.find(i, j);
        if (!rec)
            throw std::logic_error("all_applicants_like_match() on an uninterviewed matched pair");
        if (!(rec->v > inst.model.prior_v(i, j))) return false;
    }
    return true;
}

}  // namespace imatch
