#ifndef LOBBY_POLY_SOLVERS_HPP
#define LOBBY_POLY_SOLVERS_HPP

#include "lobby/report.hpp"

namespace lobby {

/// Minimum microbribery budget under strict majority: per issue, lift the
/// cheapest majority of voters over the threshold. Throws InfeasibleIssue
/// when a majority cannot be reached even with every voter fully bribed.
SolveReport solve_mb_sm(const Instance& inst);

/// Minimum microbribery budget under average majority, via one path-schedule
/// dynamic program per issue (one path of marginal step costs per voter).
SolveReport solve_mb_am(const Instance& inst);

/// Minimum issue-bribery budget for either criterion: scans the candidate
/// per-issue spends m*c for column cost entries c in increasing order.
SolveReport solve_ib(const Instance& inst, Criterion criterion);

/// Minimum dollars to win a single issue by microbribery, with the witness
/// per-voter target levels. Throws InfeasibleIssue when unwinnable.
struct IssueMicroSolve {
    std::int64_t cost = 0;
    std::vector<std::int64_t> targets;  // length m
};
IssueMicroSolve mb_issue_solve(const Instance& inst, std::int64_t j, Criterion criterion);

/// Minimum per-issue spend to win issue j by issue bribery.
std::int64_t ib_issue_cost(const Instance& inst, std::int64_t j, Criterion criterion);

}  // namespace lobby

#endif
