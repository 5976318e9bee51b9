#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"

#include "imatch/interim.hpp"
#include "imatch/json_io.hpp"
#include "imatch/matching.hpp"
#include "imatch/rejections.hpp"

using namespace imatch;

TEST_CASE("matching keeps both directions in sync") {
    Matching mu(3, 4);
    CHECK(mu.matched_count() == 0);
    mu.pair(0, 2);
    CHECK(mu.position_of(0) == 2);
    CHECK(mu.applicant_of(2) == 0);
    CHECK(mu.partner(AgentId::applicant(1)) == AgentId::position(3));
    CHECK(mu.partner(AgentId::position(3)) == AgentId::applicant(1));
    // Unmatched agents are their own partner.
    CHECK(mu.partner(AgentId::applicant(2)) == AgentId::applicant(2));
    CHECK_THROWS_AS(mu.pair(1, 2), std::logic_error);
    CHECK_THROWS_AS(mu.pair(0, 3), std::logic_error);
    mu.unmatch_position(2);
    CHECK(mu.position_of(0) == -1);
    CHECK(mu.matched_count() == 0);
    CHECK_THROWS_AS(mu.unmatch_position(2), std::logic_error);
}

TEST_CASE("ledger stores each pair at most once") {
    InterviewLedger ledger(2, 3);
    ledger.add(0, 1, 0.7, 0.3);
    CHECK(ledger.contains(0, 1));
    CHECK_FALSE(ledger.contains(1, 1));
    CHECK(ledger.find(0, 1)->v == 0.7);
    CHECK(ledger.find(1, 0) == nullptr);
    CHECK_THROWS_AS(ledger.add(0, 1, 0.5, 0.5), std::logic_error);
    ledger.add(1, 1, 0.2, 0.9);
    CHECK(ledger.size() == 2);
    CHECK(ledger.records()[1].u == 0.9);
}

TEST_CASE("rejection set grows monotonically") {
    RejectionSet rejections(2, 3);
    CHECK(rejections.add(0, 0));
    CHECK_FALSE(rejections.add(0, 0));
    CHECK(rejections.contains(0, 0));
    CHECK(rejections.count_for(0) == 1);
    CHECK_FALSE(rejections.all_rejected(0));
    rejections.add(0, 1);
    rejections.add(0, 2);
    CHECK(rejections.all_rejected(0));
    CHECK(rejections.size() == 3);
    CHECK(rejections.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}});
}

TEST_CASE("ordered two-point model: priors and supports") {
    const ValueModel model = ValueModel::two_point_ordered(2, 2);
    // Prior for the first position is 2^(m-1).
    CHECK(model.prior_v(0, 0) == 2.0);
    CHECK(model.prior_v(1, 0) == 2.0);
    CHECK(model.prior_v(0, 1) == 1.0);
    CHECK(model.prior_u(0, 0) == 2.0);
    const double high = 4.0 - 1.0 / 3.0;
    const double low = 1.0 / 3.0;
    Rng rng(7);
    for (int draw = 0; draw < 200; ++draw) {
        const auto [v, u] = model.sample(0, 0, rng);
        CHECK((v == high || v == low));
        CHECK((u == high || u == low));
    }
}

TEST_CASE("ordered two-point model: all values in a row are distinct") {
    const int n = 6, m = 6;
    const ValueModel model = ValueModel::two_point_ordered(n, m);
    Rng rng(11);
    InterviewLedger ledger(n, m);
    const Instance inst(n, m, model);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) conduct_interview(inst, ledger, rng, i, j);
    for (int i = 0; i < n; ++i) {
        std::set<double> seen;
        for (int j = 0; j < m; ++j) {
            seen.insert(ledger.find(i, j)->v);
            seen.insert(inst.model.prior_v(i, j));
        }
        // m realized values plus m distinct priors.
        CHECK(seen.size() == 2 * static_cast<std::size_t>(m));
    }
}

TEST_CASE("bilateral uniform model: support and per-pair centers") {
    Rng rng(3);
    const ValueModel plain = ValueModel::bilateral_uniform(2, 2);
    for (int draw = 0; draw < 200; ++draw) {
        const auto [v, u] = plain.sample(1, 1, rng);
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    UniformParams params;
    params.v_half_width = 0.25;
    params.v_centers = {0.3, 0.7, 0.5, 0.4};
    const ValueModel centered = ValueModel::bilateral_uniform(2, 2, params);
    CHECK(centered.prior_v(0, 1) == 0.7);
    CHECK(centered.prior_u(1, 0) == 0.5);
    for (int draw = 0; draw < 200; ++draw) {
        const auto [v, u] = centered.sample(0, 1, rng);
        CHECK(v >= 0.45);
        CHECK(v < 0.95);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    UniformParams bad;
    bad.v_center = 0.2;  // support would dip below zero
    CHECK_THROWS_AS(ValueModel::bilateral_uniform(2, 2, bad), std::invalid_argument);
}

TEST_CASE("almost-equivalent model: solved point and support") {
    const ValueModel model = ValueModel::almost_equivalent(2, 2);
    CHECK(model.almost_params().mid_high_point == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(model.prior_v(0, 0) == 0.5);
    Rng rng(13);
    for (int draw = 0; draw < 400; ++draw) {
        const auto [v, u] = model.sample(0, 0, rng);
        const auto& p = model.almost_params();
        CHECK((v == p.low_point || v == p.mid_low_point || v == p.mid_high_point ||
               v == p.high_point));
        CHECK((u == p.low_point || u == p.mid_low_point || u == p.mid_high_point ||
               u == p.high_point));
    }
    AlmostEquivalentParams bad;
    bad.mid_low_point = 0.25;  // below the low threshold
    CHECK_THROWS_AS(ValueModel::almost_equivalent(2, 2, bad), std::invalid_argument);
    AlmostEquivalentParams infeasible;
    infeasible.high_point = 2.0;  // mean cannot be balanced inside the band
    CHECK_THROWS_AS(ValueModel::almost_equivalent(2, 2, infeasible), std::invalid_argument);
}

TEST_CASE("interim views switch from prior to realized value") {
    Instance inst = helpers::fixed_instance({{0.9, 0.2}, {0.4, 0.6}}, {{0.8, 0.1}, {0.3, 0.7}});
    InterviewLedger ledger(2, 2);
    Rng rng(1);

    CHECK(interim_utility(inst, ledger, AgentId::applicant(1), AgentId::position(1)) == 0.5);
    CHECK(interim_utility(inst, ledger, AgentId::position(1), AgentId::applicant(1)) == 0.5);

    const InterviewRecord& rec = conduct_interview(inst, ledger, rng, 0, 0);
    CHECK(rec.v == 0.9);
    CHECK(rec.u == 0.8);
    CHECK(interim_utility(inst, ledger, AgentId::applicant(1), AgentId::position(1)) == 0.9);
    CHECK(interim_utility(inst, ledger, AgentId::position(1), AgentId::applicant(1)) == 0.8);
    CHECK_THROWS_AS(conduct_interview(inst, ledger, rng, 0, 0), std::logic_error);

    CHECK(interim_prefers(inst, ledger, AgentId::applicant(1), AgentId::position(1),
                          AgentId::position(2)));
    CHECK_FALSE(interim_prefers(inst, ledger, AgentId::applicant(1), AgentId::position(2),
                                AgentId::position(1)));
    // Any position beats Unmatched; equal utilities are not a strict preference.
    CHECK(interim_prefers(inst, ledger, AgentId::applicant(1), AgentId::position(2), std::nullopt));
    CHECK_FALSE(interim_prefers(inst, ledger, AgentId::applicant(1), std::nullopt,
                                AgentId::position(2)));
    CHECK_FALSE(interim_prefers(inst, ledger, AgentId::applicant(1), std::nullopt, std::nullopt));
    CHECK_FALSE(interim_prefers(inst, ledger, AgentId::applicant(2), AgentId::position(1),
                                AgentId::position(2)));

    CHECK(interim_likes(inst, ledger, AgentId::applicant(1), AgentId::position(1)));
    CHECK(interim_likes(inst, ledger, AgentId::position(1), AgentId::applicant(1)));
    CHECK_THROWS_AS(interim_likes(inst, ledger, AgentId::applicant(2), AgentId::position(2)),
                    std::logic_error);
    CHECK_THROWS_AS(interim_utility(inst, ledger, AgentId::applicant(1), AgentId::applicant(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(interim_utility(inst, ledger, AgentId::applicant(3), AgentId::position(1)),
                    std::invalid_argument);
}

TEST_CASE("realized value equal to the prior does not count as liking") {
    Instance inst = helpers::fixed_instance({{0.5, 0.2}, {0.4, 0.6}}, {{0.8, 0.1}, {0.3, 0.7}});
    InterviewLedger ledger(2, 2);
    Rng rng(1);
    conduct_interview(inst, ledger, rng, 0, 0);
    CHECK_FALSE(interim_likes(inst, ledger, AgentId::applicant(1), AgentId::position(1)));
}

TEST_CASE("fixed-matrix sampling does not consume the random stream") {
    Instance inst = helpers::fixed_instance({{0.9, 0.2}, {0.4, 0.6}}, {{0.8, 0.1}, {0.3, 0.7}});
    InterviewLedger ledger(2, 2);
    Rng rng(42);
    conduct_interview(inst, ledger, rng, 0, 0);
    Rng fresh(42);
    CHECK(rng.uniform01() == fresh.uniform01());
}

TEST_CASE("argmax over positions respects rejections and ceiling mode") {
    Instance inst = helpers::fixed_instance({{0.9, 0.2, 0.3}, {0.4, 0.6, 0.5}},
                                            {{0.8, 0.1}, {0.3, 0.7}, {0.2, 0.2}});
    InterviewLedger ledger(2, 3);
    RejectionSet rejections(2, 3);
    Rng rng(1);

    // All priors tie at 0.5.
    CHECK(argmax_positions(inst, ledger, rejections, 0) == std::vector<int>{0, 1, 2});
    conduct_interview(inst, ledger, rng, 0, 0);
    CHECK(argmax_positions(inst, ledger, rejections, 0) == std::vector<int>{0});
    rejections.add(0, 0);
    CHECK(argmax_positions(inst, ledger, rejections, 0) == std::vector<int>{1, 2});

    // Ceiling mode lifts uninterviewed positions to the cap.
    ArgmaxOptions ceil_opts;
    ceil_opts.treat_uninterviewed_as_ceiling = true;
    ceil_opts.ceiling = 0.95;
    RejectionSet none(2, 3);
    CHECK(argmax_positions(inst, ledger, none, 0, ceil_opts) == std::vector<int>{1, 2});
}

TEST_CASE("stream derivation separates instance and run draws") {
    CHECK(derive_stream(1, kInstanceStream) != derive_stream(1, kRunStream));
    CHECK(derive_stream(1, kRunStream) != derive_stream(2, kRunStream));
    CHECK(derive_stream(5, kRunStream) == derive_stream(5, kRunStream));
}

TEST_CASE("instance serialization round-trips") {
    const Instance d1 = helpers::d1_instance();
    CHECK(d1.n == 5);
    CHECK(d1.m == 5);
    CHECK(d1.model.kind() == ValueKind::FixedMatrices);
    CHECK(d1.model.prior_v(0, 0) == 0.5);
    // Known cell of the fixture.
    InterviewLedger ledger(5, 5);
    Rng rng(0);
    const InterviewRecord& rec = conduct_interview(d1, ledger, rng, 3, 2);
    CHECK(rec.v == 0.894);
    CHECK(rec.u == 0.889);

    const Instance back = instance_from_json(instance_to_json(d1));
    CHECK(back.model.fixed_v() == d1.model.fixed_v());
    CHECK(back.model.fixed_u() == d1.model.fixed_u());

    UniformParams params;
    params.v_half_width = 0.25;
    params.v_centers = {0.3, 0.7, 0.5, 0.4};
    const Instance uniform(2, 2, ValueModel::bilateral_uniform(2, 2, params));
    const Instance uniform_back = instance_from_json(instance_to_json(uniform));
    CHECK(uniform_back.model.uniform_params().v_centers == params.v_centers);
    CHECK(uniform_back.model.uniform_params().v_half_width == 0.25);

    const Instance two_point(3, 4, ValueModel::two_point_ordered(3, 4));
    const Instance two_point_back = instance_from_json(instance_to_json(two_point));
    CHECK(two_point_back.model.prior_v(0, 0) == two_point.model.prior_v(0, 0));

    const Instance almost(2, 2, ValueModel::almost_equivalent(2, 2));
    const Instance almost_back = instance_from_json(instance_to_json(almost));
    CHECK(almost_back.model.almost_params().mid_high_point ==
          almost.model.almost_params().mid_high_point);

    CHECK_THROWS_AS(instance_from_json("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(instance_from_json(R"({"n":2,"m":2,"kind":"nope"})"), std::invalid_argument);
}

TEST_CASE("matching and ledger serialization round-trips") {
    Matching mu(3, 3);
    mu.pair(0, 2);
    mu.pair(2, 0);
    const Matching mu_back = matching_from_json(matching_to_json(mu));
    CHECK(mu_back == mu);
    CHECK_THROWS_AS(matching_from_json(R"({"n":2,"m":2,"pairs":[[1,1],[2,1]]})"),
                    std::invalid_argument);

    InterviewLedger ledger(3, 3);
    ledger.add(0, 1, 0.25, 0.75);
    ledger.add(2, 2, 1.5, 0.125);
    const InterviewLedger ledger_back = ledger_from_json(ledger_to_json(ledger));
    REQUIRE(ledger_back.size() == 2);
    CHECK(ledger_back.records()[0].v == 0.25);
    CHECK(ledger_back.records()[1].applicant == 2);
    CHECK(ledger_back.records()[1].v == 1.5);
}

TEST_CASE("instance rejects degenerate sizes") {
    CHECK_THROWS_AS(ValueModel::two_point_ordered(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(ValueModel::two_point_ordered(3, 1), std::invalid_argument);
}
