#ifndef LOBBY_HARD_SOLVERS_HPP
#define LOBBY_HARD_SOLVERS_HPP

#include <optional>

#include "lobby/report.hpp"

namespace lobby {

struct GreedyStep {
    std::int64_t voter = 0;
    std::int64_t dollars = 0;                 // positive multiple of n
    std::vector<std::int64_t> issues_raised;  // unwon issues influenced
};

/// Full record of a greedy voter-bribery run.
struct GreedyTrace {
    std::vector<GreedyStep> steps;
    std::int64_t total_cost = 0;
    std::int64_t cover_total = 0;  // N before the first step
    double ratio_bound = 1.0;      // ln(N) + 1
};

/// Cumulative per-voter dollars of a trace.
VoterPlan trace_plan(const GreedyTrace& trace, std::int64_t m);

/// Exhaustive minimum-cost voter bribery with branch-and-bound pruning.
/// Per-voter candidate spends are multiples of n taken from the cost table.
SolveReport solve_vb_exact(const Instance& inst, Criterion criterion);

/// Voter-profile kernel for VB-SM: voters are grouped by their per-issue
/// minimal crossing spends and at most `budget` voters are kept per profile.
/// Preserves the minimum VB-SM cost whenever it does not exceed the budget.
Instance kernelize_vb(const Instance& inst, Criterion criterion = Criterion::SM);

/// Greedy cover-style approximation for minimum voter bribery, AM and SM.
/// Returns nullopt when some issue is unwinnable.
std::optional<GreedyTrace> greedy_vb(const Instance& inst, Criterion criterion);

/// Issue-weighted MB/IB via a budget-indexed knapsack DP over the per-issue
/// minimum winning costs.
SolveReport solve_weighted_mb_ib(const Instance& inst, Method method, Criterion criterion);

/// Exact-spend microbribery: feasible iff some micro plan costs exactly the
/// budget and wins the agenda.
SolveReport solve_exact_mb(const Instance& inst, Criterion criterion);

/// Brute-force weighted voter bribery: cheapest plan whose outcome matches
/// at least `objective` total issue weight.
SolveReport solve_weighted_vb_exact(const Instance& inst, Criterion criterion);

}  // namespace lobby

#endif
