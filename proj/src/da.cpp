#include "imatch/da.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "imatch/interim.hpp"

namespace imatch {

namespace {

void validate(const PreferenceProfile& profile, const Matching& matching,
              const RejectionSet& rejections) {
    const int n = static_cast<int>(profile.applicant_orders.size());
    if (n != matching.n() || n != rejections.n())
        throw std::invalid_argument("profile, matching, and rejections disagree on n");
    if (matching.m() != rejections.m())
        throw std::invalid_argument("matching and rejections disagree on m");
    if (!profile.position_prefers)
        throw std::invalid_argument("profile needs a position comparator");
    for (const auto& order : profile.applicant_orders) {
        std::vector<char> seen(matching.m(), 0);
        for (int j : order) {
            if (j < 0 || j >= matching.m()) throw std::invalid_argument("position out of range");
            if (seen[j]) throw std::invalid_argument("duplicate position in preference order");
            seen[j] = 1;
        }
    }
}

// Positions sorted by utility descending, index ascending on ties.
std::vector<int> sorted_positions(const std::vector<double>& utility) {
    std::vector<int> order(utility.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
    std::stable_sort(order.begin(), order.end(),
                     [&utility](int a, int b) { return utility[a] > utility[b]; });
    return order;
}

}  // namespace

Matching applicant_proposing_da(const PreferenceProfile& profile, Matching matching,
                                RejectionSet& rejections, const DaEventHook& hook) {
    validate(profile, matching, rejections);
    const int n = matching.n();

    std::vector<std::size_t> cursor(n, 0);
    std::set<int> active;
    for (int i = 0; i < n; ++i)
        if (!matching.applicant_matched(i)) active.insert(i);

    while (!active.empty()) {
        const int i = *active.begin();
        const auto& order = profile.applicant_orders[i];
        // Skip positions that rejected this applicant, in this run or before.
        std::size_t& at = cursor[i];
        while (at < order.size() && rejections.contains(i, order[at])) ++at;
        if (at == order.size()) {
            active.erase(active.begin());
            continue;
        }
        const int j = order[at];
        const int holder = matching.applicant_of(j);
        if (profile.position_prefers(j, i, holder)) {
            if (holder >= 0) {
                matching.unmatch_position(j);
                rejections.add(holder, j);
                active.insert(holder);
            }
            matching.pair(i, j);
            active.erase(i);
            if (hook) hook(EventKind::ProposalAccept, i, j);
        } else {
            rejections.add(i, j);
            if (hook) hook(EventKind::ProposalReject, i, j);
        }
    }
    return matching;
}

PreferenceProfile build_interim_profile(const Instance& inst, const InterviewLedger& ledger,
                                        InterimMode mode) {
    PreferenceProfile profile;
    profile.applicant_orders.resize(inst.n);
    for (int i = 0; i < inst.n; ++i) {
        std::vector<double> utility(inst.m);
        for (int j = 0; j < inst.m; ++j) utility[j] = applicant_interim(inst, ledger, i, j);
        std::vector<int> order = sorted_positions(utility);
        if (mode == InterimMode::RealizedOnly) {
            std::erase_if(order, [&](int j) { return !ledger.contains(i, j); });
        }
        profile.applicant_orders[i] = std::move(order);
    }
    profile.position_prefers = [&inst, &ledger](int j, int a, int b) {
        if (a == kUnmatched) return false;
        if (b == kUnmatched) return true;
        return position_interim(inst, ledger, j, a) > position_interim(inst, ledger, j, b);
    };
    return profile;
}

Matching truncated_da(const Instance& inst, const InterviewLedger& ledger, Matching matching,
                      RejectionSet& rejections, const DaEventHook& hook) {
    PreferenceProfile profile = build_interim_profile(inst, ledger, InterimMode::FullInterim);
    for (int i = 0; i < inst.n; ++i) {
        auto& order = profile.applicant_orders[i];
        // Pivot: the best position this applicant has not interviewed. She
        // only keeps positions she values strictly above it, so every kept
        // entry is backed by a realized value.
        double pivot = 0.0;
        bool has_pivot = false;
        for (int j = 0; j < inst.m; ++j) {
            if (ledger.contains(i, j)) continue;
            const double value = applicant_interim(inst, ledger, i, j);
            if (!has_pivot || value > pivot) {
                pivot = value;
                has_pivot = true;
            }
        }
        if (!has_pivot) continue;  // interviewed everywhere: keep the full list
        std::size_t keep = 0;
        while (keep < order.size() && applicant_interim(inst, ledger, i, order[keep]) > pivot)
            ++keep;
        order.resize(keep);
    }
    return applicant_proposing_da(profile, std::move(matching), rejections, hook);
}

}  // namespace imatch
