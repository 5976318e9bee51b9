#include "imatch/interim.hpp"

#include <algorithm>
#include <stdexcept>

namespace imatch {

namespace {

void check_applicant(const Instance& inst, int applicant) {
    if (applicant < 0 || applicant >= inst.n) throw std::invalid_argument("applicant out of range");
}

void check_position(const Instance& inst, int position) {
    if (position < 0 || position >= inst.m) throw std::invalid_argument("position out of range");
}

void check_id(const Instance& inst, AgentId id) {
    if (id.side == Side::Applicant)
        check_applicant(inst, id.index - 1);
    else
        check_position(inst, id.index - 1);
}

void check_opposite(AgentId viewer, AgentId target) {
    if (viewer.side == target.side)
        throw std::invalid_argument("viewer and target must be on opposite sides");
}

}  // namespace

double applicant_interim(const Instance& inst, const InterviewLedger& ledger, int applicant,
                         int position) {
    const InterviewRecord* rec = ledger.find(applicant, position);
    return rec ? rec->v : inst.model.prior_v(applicant, position);
}

double position_interim(const Instance& inst, const InterviewLedger& ledger, int position,
                        int applicant) {
    const InterviewRecord* rec = ledger.find(applicant, position);
    return rec ? rec->u : inst.model.prior_u(position, applicant);
}

double interim_utility(const Instance& inst, const InterviewLedger& ledger, AgentId viewer,
                       AgentId target) {
    check_id(inst, viewer);
    check_id(inst, target);
    check_opposite(viewer, target);
    if (viewer.side == Side::Applicant)
        return applicant_interim(inst, ledger, viewer.index - 1, target.index - 1);
    return position_interim(inst, ledger, viewer.index - 1, target.index - 1);
}

bool interim_prefers(const Instance& inst, const InterviewLedger& ledger, AgentId viewer,
                     std::optional<AgentId> first, std::optional<AgentId> second) {
    check_id(inst, viewer);
    // Unmatched is strictly worse than any agent; two Unmatched are equal,
    // and equal utilities never count as a strict preference.
    if (!first) return false;
    if (!second) return true;
    return interim_utility(inst, ledger, viewer, *first) >
           interim_utility(inst, ledger, viewer, *second);
}

bool interim_likes(const Instance& inst, const InterviewLedger& ledger, AgentId viewer,
                   AgentId target) {
    check_id(inst, viewer);
    check_id(inst, target);
    check_opposite(viewer, target);
    const int applicant = viewer.side == Side::Applicant ? viewer.index - 1 : target.index - 1;
    const int position = viewer.side == Side::Applicant ? target.index - 1 : viewer.index - 1;
    const InterviewRecord* rec = ledger.find(applicant, position);
    if (!rec) throw std::logic_error("interim_likes() requires the pair to have interviewed");
    if (viewer.side == Side::Applicant) return rec->v > inst.model.prior_v(applicant, position);
    return rec->u > inst.model.prior_u(position, applicant);
}

const InterviewRecord& conduct_interview(const Instance& inst, InterviewLedger& ledger, Rng& rng,
                                         int applicant, int position) {
    check_applicant(inst, applicant);
    check_position(inst, position);
    if (ledger.contains(applicant, position))
        throw std::logic_error("conduct_interview() on an already interviewed pair");
    const auto [v, u] = inst.model.sample(applicant, position, rng);
    return ledger.add(applicant, position, v, u);
}

std::vector<int> argmax_positions(const Instance& inst, const InterviewLedger& ledger,
                                  const RejectionSet& rejections, int applicant,
                                  const ArgmaxOptions& options) {
    check_applicant(inst, applicant);
    std::vector<int> best;
    double best_value = 0.0;
    for (int j = 0; j < inst.m; ++j) {
        if (rejections.contains(applicant, j)) continue;
        const bool interviewed = ledger.contains(applicant, j);
        double value = interviewed ? ledger.find(applicant, j)->v
                                   : inst.model.prior_v(applicant, j);
        if (options.treat_uninterviewed_as_ceiling && !interviewed) value = options.ceiling;
        if (best.empty() || value > best_value) {
            best_value = value;
            best.assign(1, j);
        } else if (value == best_value) {
            best.push_back(j);
        }
    }
    // Under the ceiling rule, ties inside the argmax set defer to the
    // original prior expectations before any index tie-break.
    if (options.treat_uninterviewed_as_ceiling && best.size() > 1) {
        double top = inst.model.prior_v(applicant, best.front());
        for (int j : best) top = std::max(top, inst.model.prior_v(applicant, j));
        std::vector<int> kept;
        for (int j : best)
            if (inst.model.prior_v(applicant, j) == top) kept.push_back(j);
        best = std::move(kept);
    }
    return best;
}

}  // namespace imatch
