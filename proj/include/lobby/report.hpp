#ifndef LOBBY_REPORT_HPP
#define LOBBY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lobby/instance.hpp"

namespace lobby {

enum class Method { MB, IB, VB };

enum class SolverTag { ExactPoly, ExactBrute, Greedy, Oracle, KnapsackDp };

/// Result of a minimum-budget (or exact-spend / weighted) solve.
struct SolveReport {
    bool feasible = false;                       // achievable within the budget
    std::optional<std::int64_t> min_cost;        // absent if no plan ever wins
    std::optional<BriberyPlan> plan;             // witness for min_cost
    std::vector<std::int64_t> per_issue_cost;    // empty for plan-global solvers
    SolverTag solver = SolverTag::ExactPoly;
};

}  // namespace lobby

#endif
