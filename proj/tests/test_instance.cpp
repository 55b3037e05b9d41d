#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lobby/generators.hpp"
#include "lobby/instance.hpp"
#include "test_util.hpp"

using namespace lobby;
using testutil::running_example;
using testutil::X;

TEST_CASE("reference instance evaluates as expected under both criteria") {
    Instance inst = running_example();
    CHECK(evaluate(inst, Criterion::SM).bits == std::vector<int>{0, 0, 0});
    CHECK(evaluate(inst, Criterion::AM).bits == std::vector<int>{1, 0, 0});
    CHECK_FALSE(achieves_agenda(inst, Criterion::SM));
    CHECK_FALSE(achieves_agenda(inst, Criterion::AM));
}

TEST_CASE("strict versus weak comparison at an exactly attained average") {
    // Issue 2's average sits exactly at 1/2: strict rejects, weak accepts.
    Instance strict = running_example({1, 2}, Comparison::Strict);
    Instance weak = running_example({1, 2}, Comparison::Weak);
    CHECK(evaluate(strict, Criterion::AM).bits[1] == 0);
    CHECK(evaluate(weak, Criterion::AM).bits[1] == 1);
}

TEST_CASE("validation rejects malformed instances") {
    auto code_of = [](Instance bad) {
        try {
            validate_instance(std::move(bad));
        } catch (const ValidationError& e) {
            return e.code;
        }
        return ValidationError::Code{-1};
    };

    Instance good = running_example();

    SUBCASE("shape mismatch") {
        Instance bad = good;
        bad.agenda.pop_back();
        CHECK(code_of(bad) == ValidationError::Code::ShapeMismatch);
        bad = good;
        bad.prob[0].pop_back();
        CHECK(code_of(bad) == ValidationError::Code::ShapeMismatch);
        bad = good;
        bad.prob[1][2] = 11;
        CHECK(code_of(bad) == ValidationError::Code::ShapeMismatch);
        bad = good;
        bad.threshold = {3, 2};
        CHECK(code_of(bad) == ValidationError::Code::ShapeMismatch);
    }
    SUBCASE("nonzero or missing base cost") {
        Instance bad = good;
        bad.cost[0][0][8] = 7;
        CHECK(code_of(bad) == ValidationError::Code::NonzeroBaseCost);
        bad = good;
        bad.cost[0][0][8] = X;
        CHECK(code_of(bad) == ValidationError::Code::NonzeroBaseCost);
    }
    SUBCASE("non-monotone costs") {
        Instance bad = good;
        bad.cost[0][1][6] = 5;  // cheaper than the level below it
        CHECK(code_of(bad) == ValidationError::Code::NonMonotoneCost);
        bad = good;
        bad.cost[0][1][6] = 0;  // zero off the base level
        CHECK(code_of(bad) == ValidationError::Code::NonMonotoneCost);
    }
    SUBCASE("missing agenda-side cost") {
        Instance bad = good;
        bad.cost[0][1][7] = X;
        CHECK(code_of(bad) == ValidationError::Code::MissingAgendaSideCost);
    }
    SUBCASE("weights and objective must come together") {
        Instance bad = good;
        bad.weights = std::vector<std::int64_t>{1, 2, 3};
        CHECK(code_of(bad) == ValidationError::Code::ShapeMismatch);
        bad = good;
        bad.weights = std::vector<std::int64_t>{1, 0, 3};
        bad.objective = 2;
        CHECK(code_of(bad) == ValidationError::Code::ShapeMismatch);
    }
}

TEST_CASE("agenda normalization mirrors levels and reverses price rows") {
    Instance inst;
    inst.k = 1;
    inst.m = 1;
    inst.n = 2;
    inst.agenda = {0, 1};
    inst.budget = 10;
    inst.prob = {{2, 0}};
    inst.cost = {{{4, 1, 0}, {0, 2, 5}}};
    inst = validate_instance(std::move(inst));

    Instance norm = normalize_agenda(inst);
    CHECK(norm.normalized());
    CHECK(norm.prob[0][0] == 0);  // 2 mirrors to k+1-2
    CHECK(norm.cost[0][0] == CostRow{0, 1, 4});
    CHECK(norm.prob[0][1] == 0);  // agenda-1 column untouched
    CHECK(norm.cost[0][1] == CostRow{0, 2, 5});
}

TEST_CASE("normalization preserves outcomes componentwise") {
    GenConfig cfg;
    cfg.agenda = AgendaPolicy::Random;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        cfg.seed = seed;
        Instance inst = gen_random(cfg);
        Instance norm = normalize_agenda(inst);
        for (Criterion crit : {Criterion::SM, Criterion::AM}) {
            CAPTURE(seed);
            Outcome orig = evaluate(inst, crit);
            Outcome mapped = evaluate(norm, crit);
            for (std::int64_t j = 0; j < inst.n; ++j)
                CHECK(mapped.bits[j] == (orig.bits[j] == inst.agenda[j] ? 1 : 0));
            CHECK(achieves_agenda(inst, crit) == achieves_agenda(norm, crit));
        }
    }
}

TEST_CASE("cover numbers on the reference instance") {
    Instance am = running_example({3, 5}, Comparison::Weak);
    CoverProfile cp = cover_numbers(am, Criterion::AM);
    CHECK(cp.per_issue == std::vector<std::int64_t>{0, 2, 3});
    CHECK(cp.total == 5);

    Instance sm = running_example();
    CoverProfile sp = cover_numbers(sm, Criterion::SM);
    CHECK(sp.per_issue == std::vector<std::int64_t>{1, 1, 2});
    CHECK(sp.total == 4);

    // A strict threshold of one can never be exceeded.
    CHECK_THROWS_AS(cover_numbers(running_example({1, 1}, Comparison::Strict),
                                  Criterion::SM),
                    Infeasible);
}

TEST_CASE("voter credits move levels and re-base the price rows") {
    Instance inst = running_example();

    // 30 dollars on the first voter credits 10 per referendum: only the
    // second referendum's level moves (one step).
    Instance after = apply_bribery(inst, VoterPlan{{30, 0}});
    CHECK(after.prob[0] == std::vector<std::int64_t>{8, 4, 5});
    CHECK(after.prob[1] == std::vector<std::int64_t>{4, 7, 4});

    // Remaining prices drop by the credited share and the old levels
    // behind the new base become unimportant.
    CHECK(after.cost[0][1][4] == 0);
    CHECK(after.cost[0][1][5] == 60);
    CHECK_FALSE(after.cost[0][1][3].has_value());
    CHECK(after.cost[0][2][6] == 5);

    // 15 more dollars (45 in total) lifts the third referendum one level.
    Instance after45 = apply_bribery(inst, VoterPlan{{45, 0}});
    CHECK(after45.prob[0] == std::vector<std::int64_t>{8, 4, 6});
}

TEST_CASE("issue credits split across voters") {
    Instance inst = running_example();
    // 80 dollars on the first referendum is 40 per voter: the second voter
    // climbs two levels, the first voter cannot afford a step.
    Instance after = apply_bribery(inst, IssuePlan{{80, 0, 0}});
    CHECK(after.prob[0][0] == 8);
    CHECK(after.prob[1][0] == 6);
    CHECK(evaluate(after, Criterion::SM).bits[0] == 1);
}

TEST_CASE("micro plans pay list price and reject wrong-direction targets") {
    Instance inst = running_example();
    MicroPlan plan{inst.prob};
    plan.target[0][1] = 7;
    plan.target[1][0] = 5;
    CHECK(plan_cost(inst, plan) == 170);
    Instance after = apply_bribery(inst, plan);
    CHECK(after.prob[0][1] == 7);
    CHECK(after.prob[1][0] == 5);

    MicroPlan bad{inst.prob};
    bad.target[0][0] = 2;  // below the base, against the agenda
    CHECK_THROWS_AS(apply_bribery(inst, bad), WrongDirection);
    CHECK_THROWS_AS(apply_bribery(inst, VoterPlan{{-1, 0}}), WrongDirection);
}

TEST_CASE("reachable level walks the price row exactly") {
    Instance inst = running_example();
    CHECK(reachable_level(inst, 0, 1, 9, 1) == 3);
    CHECK(reachable_level(inst, 0, 1, 10, 1) == 4);
    CHECK(reachable_level(inst, 0, 1, 600, 1) == 10);
    CHECK(reachable_level(inst, 0, 1, 29, 3) == 3);   // 29/3 < 10
    CHECK(reachable_level(inst, 0, 1, 30, 3) == 4);
}
