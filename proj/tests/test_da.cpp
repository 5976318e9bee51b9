#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "imatch/da.hpp"
#include "imatch/interim.hpp"
#include "imatch/rng.hpp"

using namespace imatch;

namespace {

PreferenceProfile ranked_profile(std::vector<std::vector<int>> prefs_a,
                                 const std::vector<std::vector<int>>& prefs_p, int n) {
    PreferenceProfile profile;
    profile.applicant_orders = std::move(prefs_a);
    std::vector<std::vector<int>> rank(prefs_p.size(), std::vector<int>(n, n + 1));
    for (std::size_t j = 0; j < prefs_p.size(); ++j)
        for (std::size_t r = 0; r < prefs_p[j].size(); ++r) rank[j][prefs_p[j][r]] = static_cast<int>(r);
    profile.position_prefers = [rank](int j, int a, int b) {
        if (a == kUnmatched) return false;
        if (b == kUnmatched) return true;
        return rank[j][a] < rank[j][b];
    };
    return profile;
}

std::vector<int> random_permutation(int count, Rng& rng) {
    std::vector<int> order(count);
    for (int i = 0; i < count; ++i) order[i] = i;
    for (int i = count - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }
    return order;
}

}  // namespace

TEST_CASE("deferred acceptance matches the enumeration oracle on small markets") {
    for (int seed = 0; seed < 200; ++seed) {
        const int n = 2 + seed % 3;
        Rng rng(derive_stream(seed, 77));
        std::vector<std::vector<int>> prefs_a(n), prefs_p(n);
        for (int i = 0; i < n; ++i) prefs_a[i] = random_permutation(n, rng);
        for (int j = 0; j < n; ++j) prefs_p[j] = random_permutation(n, rng);

        RejectionSet rejections(n, n);
        const Matching result = applicant_proposing_da(ranked_profile(prefs_a, prefs_p, n),
                                                       Matching(n, n), rejections);
        std::vector<int> match(n);
        for (int i = 0; i < n; ++i) match[i] = result.position_of(i);

        CAPTURE(seed);
        CHECK(oracles::ranked_blocking_pairs(prefs_a, prefs_p, match).empty());
        const auto stable = oracles::enumerate_stable(prefs_a, prefs_p);
        REQUIRE(!stable.empty());
        const std::vector<int> best = oracles::best_stable_ranks(prefs_a, stable);
        for (int i = 0; i < n; ++i)
            CHECK(oracles::rank_in(prefs_a[i], match[i]) == best[i]);
    }
}

TEST_CASE("displacement rejects the ousted applicant and lets her continue") {
    // p1 prefers a2; a1 arrives first and is displaced.
    PreferenceProfile profile = ranked_profile({{0, 1}, {0, 1}}, {{1, 0}, {0, 1}}, 2);
    RejectionSet rejections(2, 2);
    const Matching result = applicant_proposing_da(profile, Matching(2, 2), rejections);
    CHECK(result.position_of(1) == 0);
    CHECK(result.position_of(0) == 1);
    CHECK(rejections.contains(0, 0));
    CHECK_FALSE(rejections.contains(1, 0));
}

TEST_CASE("a proposal the position does not strictly prefer is rejected") {
    // p1 ranks a1 ahead of a2, so a2's proposal bounces.
    PreferenceProfile profile = ranked_profile({{0}, {0}}, {{0, 1}, {}}, 2);
    RejectionSet rejections(2, 2);
    const Matching result = applicant_proposing_da(profile, Matching(2, 2), rejections);
    CHECK(result.position_of(0) == 0);
    CHECK(result.position_of(1) == -1);
    CHECK(rejections.contains(1, 0));
}

TEST_CASE("deferred acceptance resumes from an existing matching") {
    PreferenceProfile profile = ranked_profile({{0, 1}, {0, 1}}, {{1, 0}, {0, 1}}, 2);
    Matching start(2, 2);
    start.pair(0, 0);
    RejectionSet rejections(2, 2);
    const Matching result = applicant_proposing_da(profile, std::move(start), rejections);
    // a2 displaces the seeded match.
    CHECK(result.position_of(1) == 0);
    CHECK(result.position_of(0) == 1);
}

TEST_CASE("preference profile validation") {
    RejectionSet rejections(2, 2);
    PreferenceProfile no_comparator;
    no_comparator.applicant_orders = {{0}, {1}};
    CHECK_THROWS_AS(applicant_proposing_da(no_comparator, Matching(2, 2), rejections),
                    std::invalid_argument);
    PreferenceProfile duplicate = ranked_profile({{0, 0}, {}}, {{0, 1}, {0, 1}}, 2);
    CHECK_THROWS_AS(applicant_proposing_da(duplicate, Matching(2, 2), rejections),
                    std::invalid_argument);
    PreferenceProfile wrong_n = ranked_profile({{0}}, {{0}, {0}}, 1);
    CHECK_THROWS_AS(applicant_proposing_da(wrong_n, Matching(2, 2), rejections),
                    std::invalid_argument);
}

TEST_CASE("interim profile orders positions by interim value with index ties") {
    Instance inst = helpers::fixed_instance({{0.9, 0.2, 0.3}, {0.4, 0.6, 0.5}},
                                            {{0.8, 0.1}, {0.3, 0.7}, {0.2, 0.2}});
    InterviewLedger ledger(2, 3);
    Rng rng(1);
    conduct_interview(inst, ledger, rng, 0, 0);  // a1 at p1: 0.9
    conduct_interview(inst, ledger, rng, 1, 1);  // a2 at p2: 0.6

    const PreferenceProfile full = build_interim_profile(inst, ledger, InterimMode::FullInterim);
    CHECK(full.applicant_orders[0] == std::vector<int>{0, 1, 2});  // 0.9, then 0.5 ties by index
    CHECK(full.applicant_orders[1] == std::vector<int>{1, 0, 2});  // 0.6, then 0.5 ties

    const PreferenceProfile realized =
        build_interim_profile(inst, ledger, InterimMode::RealizedOnly);
    CHECK(realized.applicant_orders[0] == std::vector<int>{0});
    CHECK(realized.applicant_orders[1] == std::vector<int>{1});

    CHECK(full.position_prefers(0, 0, 1));       // realized 0.8 beats prior 0.5
    CHECK_FALSE(full.position_prefers(2, 0, 1)); // equal priors: no strict preference
    CHECK(full.position_prefers(2, 0, kUnmatched));
}

TEST_CASE("truncation keeps only positions above the best uninterviewed one") {
    // a1 realized 0.8 at p2; everything else sits at the 0.5 prior.
    Instance inst = helpers::fixed_instance({{0.1, 0.8, 0.2}, {0.3, 0.4, 0.2}},
                                            {{0.9, 0.1}, {0.8, 0.2}, {0.7, 0.3}});
    InterviewLedger ledger(2, 3);
    Rng rng(1);
    conduct_interview(inst, ledger, rng, 0, 1);
    RejectionSet rejections(2, 3);
    const Matching result = truncated_da(inst, ledger, Matching(2, 3), rejections);
    CHECK(result.position_of(0) == 1);
    CHECK(result.position_of(1) == -1);  // empty truncated list: nothing above the prior
    CHECK(rejections.size() == 0);
}

TEST_CASE("truncation yields an empty list when every interview disappointed") {
    Instance inst = helpers::fixed_instance({{0.3, 0.2, 0.1}, {0.3, 0.4, 0.2}},
                                            {{0.9, 0.1}, {0.8, 0.2}, {0.7, 0.3}});
    InterviewLedger ledger(2, 3);
    Rng rng(1);
    conduct_interview(inst, ledger, rng, 0, 0);
    conduct_interview(inst, ledger, rng, 0, 1);
    RejectionSet rejections(2, 3);
    const Matching result = truncated_da(inst, ledger, Matching(2, 3), rejections);
    CHECK(result.position_of(0) == -1);
    CHECK(rejections.size() == 0);
}

TEST_CASE("fully interviewed applicants keep their complete list") {
    Instance inst = helpers::fixed_instance({{0.4, 0.3}, {0.2, 0.1}}, {{0.9, 0.8}, {0.7, 0.6}});
    InterviewLedger ledger(2, 2);
    Rng rng(1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) conduct_interview(inst, ledger, rng, i, j);
    RejectionSet rejections(2, 2);
    const Matching result = truncated_da(inst, ledger, Matching(2, 2), rejections);
    // Everyone realized below prior, but the lists are complete, so the
    // assortative outcome still forms.
    CHECK(result.position_of(0) == 0);
    CHECK(result.position_of(1) == 1);
}

TEST_CASE("rejections persist into later deferred-acceptance calls") {
    Instance inst = helpers::fixed_instance({{0.8, 0.9, 0.2}, {0.3, 0.4, 0.2}},
                                            {{0.9, 0.1}, {0.8, 0.2}, {0.7, 0.3}});
    InterviewLedger ledger(2, 3);
    Rng rng(1);
    conduct_interview(inst, ledger, rng, 0, 0);  // 0.8
    conduct_interview(inst, ledger, rng, 0, 1);  // 0.9
    RejectionSet rejections(2, 3);
    rejections.add(0, 1);  // p2 already turned a1 down
    const Matching result = truncated_da(inst, ledger, Matching(2, 3), rejections);
    CHECK(result.position_of(0) == 0);
    CHECK(rejections.contains(0, 1));
}

TEST_CASE("truncated run on the fixture prefix matches the frozen outcome") {
    const Instance inst = helpers::d1_instance();
    InterviewLedger ledger(5, 5);
    Rng rng(0);
    // First five interviews of the replay.
    for (const auto& [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}})
        conduct_interview(inst, ledger, rng, i, j);
    RejectionSet rejections(5, 5);
    const Matching result = truncated_da(inst, ledger, Matching(5, 5), rejections);
    CHECK(result.position_of(0) == 0);  // a1 keeps her 0.602 at p1
    for (int i = 1; i < 5; ++i) CHECK(result.position_of(i) == -1);
}
