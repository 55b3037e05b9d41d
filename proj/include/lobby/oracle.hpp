#ifndef LOBBY_ORACLE_HPP
#define LOBBY_ORACLE_HPP

#include "lobby/report.hpp"

namespace lobby {

/// Exhaustive reference solver: exact minimum cost over all plans of the
/// given method that achieve the agenda. Exponential by design; throws
/// InstanceTooLarge past the enumeration limit. Shares only the core
/// evaluate/apply semantics with the optimized solvers.
SolveReport oracle_min_budget(const Instance& inst, Method method, Criterion criterion);

/// Exhaustive minimum cost over plans whose outcome matches at least
/// `objective` total issue weight.
SolveReport oracle_weighted(const Instance& inst, Method method, Criterion criterion);

/// True iff some micro plan costs exactly the budget and wins the agenda.
bool oracle_exact_spend(const Instance& inst, Criterion criterion);

}  // namespace lobby

#endif
