#ifndef LOBBY_GENERATORS_HPP
#define LOBBY_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "lobby/instance.hpp"

namespace lobby {

enum class AgendaPolicy { AllOnes, Random };

/// Seeded random-instance configuration; equal seeds give equal instances.
struct GenConfig {
    std::uint64_t seed = 0;
    std::int64_t m_min = 1, m_max = 3;
    std::int64_t n_min = 1, n_max = 3;
    std::int64_t k_min = 0, k_max = 3;
    std::int64_t max_cost = 9;       // largest single price increment
    std::int64_t max_budget = 100;
    AgendaPolicy agenda = AgendaPolicy::AllOnes;
    Threshold threshold{1, 2};
    Comparison comparison = Comparison::Strict;
    bool weighted = false;           // attach random weights and objective
    std::int64_t max_weight = 5;
};

/// Random valid instance: monotone costs by construction, zero at the base.
Instance gen_random(const GenConfig& cfg);

/// Single-referendum exact-spend encoding of a subset-sum question: the
/// instance is exact-spend feasible iff some subset of `a` sums to S.
Instance from_subset_sum(const std::vector<std::int64_t>& a, std::int64_t S);

/// One-voter weighted encoding of a knapsack question (weights w, profits p,
/// capacity W, profit target P).
Instance from_knapsack(const std::vector<std::int64_t>& w,
                       const std::vector<std::int64_t>& p, std::int64_t W,
                       std::int64_t P);

/// Deterministic 0/1 voting matrix with unit flip costs and budget b*n:
/// VB-SM feasible iff b voters suffice to pass every column majority.
Instance from_optimal_lobbying(const std::vector<std::vector<int>>& E,
                               const std::vector<int>& Z, std::int64_t b);

}  // namespace lobby

#endif
