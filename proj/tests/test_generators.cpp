#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "lobby/generators.hpp"
#include "lobby/hard_solvers.hpp"
#include "lobby/io.hpp"
#include "lobby/oracle.hpp"
#include "test_util.hpp"

using namespace lobby;
using testutil::subset_sum_exists;

TEST_CASE("random instances are deterministic in the seed and always valid") {
    GenConfig cfg;
    cfg.agenda = AgendaPolicy::Random;
    cfg.weighted = true;
    bool saw_zero_agenda = false;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        cfg.seed = seed;
        Instance a = gen_random(cfg);
        Instance b = gen_random(cfg);
        CHECK(serialize_instance(a) == serialize_instance(b));
        CHECK_NOTHROW(validate_instance(a));
        CHECK(a.m >= cfg.m_min);
        CHECK(a.m <= cfg.m_max);
        CHECK(a.k <= cfg.k_max);
        for (int z : a.agenda) saw_zero_agenda |= z == 0;
    }
    CHECK(saw_zero_agenda);
}

TEST_CASE("subset-sum instances are exact-spend feasible iff a subset hits the sum") {
    std::mt19937_64 rng(42);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<std::int64_t> a(uniform(1, 8));
        std::int64_t total = 0;
        for (auto& x : a) {
            x = uniform(1, 20);
            total += x;
        }
        const std::int64_t S = uniform(1, total);
        CAPTURE(iter);
        Instance inst = from_subset_sum(a, S);
        CHECK(oracle_exact_spend(inst, Criterion::SM) == subset_sum_exists(a, S));
        CHECK(solve_exact_mb(inst, Criterion::SM).feasible == subset_sum_exists(a, S));
    }
}

TEST_CASE("knapsack instances optimize the same subset selection") {
    std::mt19937_64 rng(43);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int iter = 0; iter < 60; ++iter) {
        const std::int64_t z = uniform(1, 7);
        std::vector<std::int64_t> w(z), p(z);
        std::int64_t tw = 0, tp = 0;
        for (std::int64_t j = 0; j < z; ++j) {
            w[j] = uniform(1, 12);
            p[j] = uniform(1, 12);
            tw += w[j];
            tp += p[j];
        }
        const std::int64_t W = uniform(0, tw), P = uniform(0, tp);

        // Cheapest subset weight reaching the profit target.
        std::optional<std::int64_t> best;
        for (std::int64_t mask = 0; mask < (std::int64_t{1} << z); ++mask) {
            std::int64_t weight = 0, profit = 0;
            for (std::int64_t j = 0; j < z; ++j)
                if (mask & (std::int64_t{1} << j)) {
                    weight += w[j];
                    profit += p[j];
                }
            if (profit >= P && (!best || weight < *best)) best = weight;
        }

        CAPTURE(iter);
        Instance inst = from_knapsack(w, p, W, P);
        SolveReport rep = solve_weighted_mb_ib(inst, Method::MB, Criterion::SM);
        CHECK(rep.feasible == (best && *best <= W));
        if (rep.feasible) CHECK(rep.min_cost == best);
    }
}

namespace {

// Can b full-row flips toward Z carry a strict majority in every column?
bool ol_brute_force(const std::vector<std::vector<int>>& E,
                    const std::vector<int>& Z, std::int64_t b) {
    const std::int64_t m = static_cast<std::int64_t>(E.size());
    const std::int64_t n = static_cast<std::int64_t>(Z.size());
    for (std::int64_t mask = 0; mask < (std::int64_t{1} << m); ++mask) {
        if (std::popcount(static_cast<std::uint64_t>(mask)) > b) continue;
        bool all = true;
        for (std::int64_t j = 0; j < n && all; ++j) {
            std::int64_t cnt = 0;
            for (std::int64_t i = 0; i < m; ++i)
                if ((mask & (std::int64_t{1} << i)) || E[i][j] == Z[j]) ++cnt;
            all = 2 * cnt > m;
        }
        if (all) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("deterministic lobbying instances decide the same flip question") {
    std::mt19937_64 rng(44);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int iter = 0; iter < 80; ++iter) {
        const std::int64_t m = uniform(1, 4), n = uniform(1, 3);
        std::vector<std::vector<int>> E(m, std::vector<int>(n));
        std::vector<int> Z(n);
        for (auto& row : E)
            for (auto& e : row) e = static_cast<int>(uniform(0, 1));
        for (auto& z : Z) z = static_cast<int>(uniform(0, 1));
        const std::int64_t b = uniform(0, m);

        CAPTURE(iter);
        Instance inst = normalize_agenda(from_optimal_lobbying(E, Z, b));
        SolveReport rep = solve_vb_exact(inst, Criterion::SM);
        CHECK(rep.feasible == ol_brute_force(E, Z, b));
    }
}

TEST_CASE("reduction sources validate their arguments") {
    CHECK_THROWS_AS(from_subset_sum({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(from_knapsack({1, 2}, {1}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(from_optimal_lobbying({{1}}, {1, 0}, 1), std::invalid_argument);
}
