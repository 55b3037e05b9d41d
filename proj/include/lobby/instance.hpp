#ifndef LOBBY_INSTANCE_HPP
#define LOBBY_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "lobby/errors.hpp"
#include "lobby/rational.hpp"

namespace lobby {

/// Exact rational threshold in [0, 1].
struct Threshold {
    std::int64_t num = 1;
    std::int64_t den = 2;
};

/// One voter/issue price function: dollars per grid level, or nullopt for
/// entries on the unimportant side of the agenda.
using CostRow = std::vector<std::optional<std::int64_t>>;

enum class Criterion { SM, AM };

/// A probabilistic lobbying instance. Probabilities are stored as integer
/// grid levels: level a on grid k means probability a/(k+1).
struct Instance {
    std::int64_t k = 0;        // discretization level; grid has k+2 points
    std::int64_t m = 0;        // voters
    std::int64_t n = 0;        // issues
    std::vector<std::vector<std::int64_t>> prob;  // m x n levels in [0, k+1]
    std::vector<std::vector<CostRow>> cost;       // m x n rows of k+2 entries
    std::vector<int> agenda;                      // length n, 0/1
    Threshold threshold;
    Comparison comparison = Comparison::Strict;
    std::optional<std::vector<std::int64_t>> weights;  // length n, positive
    std::optional<std::int64_t> objective;
    std::int64_t budget = 0;

    std::int64_t grid_denom() const { return k + 1; }
    bool normalized() const;
};

struct Outcome {
    std::vector<int> bits;  // length n, 0/1 referendum results

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Target grid level per voter/issue pair.
struct MicroPlan {
    std::vector<std::vector<std::int64_t>> target;  // m x n
};

/// Dollars per issue, split d/m over the voters.
struct IssuePlan {
    std::vector<std::int64_t> dollars;  // length n
};

/// Dollars per voter, split d/n over the issues.
struct VoterPlan {
    std::vector<std::int64_t> dollars;  // length m
};

using BriberyPlan = std::variant<MicroPlan, IssuePlan, VoterPlan>;

/// Per-issue deficits: level raises still needed (AM) or voters still
/// needing to cross the threshold (SM).
struct CoverProfile {
    std::vector<std::int64_t> per_issue;
    std::int64_t total = 0;
};

/// Checks all structural invariants and returns the instance unchanged.
/// Throws ValidationError on the first violation found.
Instance validate_instance(Instance inst);

/// Rewrites the instance to an all-ones agenda by mirroring levels and cost
/// rows of agenda-0 columns. Evaluation outcomes correspond componentwise.
Instance normalize_agenda(Instance inst);

/// Referendum results under the chosen criterion, exact rational arithmetic.
Outcome evaluate(const Instance& inst, Criterion criterion);

/// True iff every referendum result matches the agenda.
bool achieves_agenda(const Instance& inst, Criterion criterion);

/// Applies a bribery plan: levels move in the agenda direction as far as the
/// money reaches, and the returned instance carries re-based costs (new base
/// costs zero, remaining agenda-side costs reduced by the credited share,
/// floored at zero).
Instance apply_bribery(const Instance& inst, const BriberyPlan& plan);

/// Total dollars of a plan. MicroPlan cost reads the instance's cost table.
std::int64_t plan_cost(const Instance& inst, const BriberyPlan& plan);

/// Cover numbers of a normalized instance. Throws Infeasible if some issue
/// cannot be won even with all voters at probability one.
CoverProfile cover_numbers(const Instance& inst, Criterion criterion);

// Shared helpers.

/// True iff level/(k+1) lies above the instance threshold.
bool level_above(const Instance& inst, std::int64_t level);

/// Highest level (in the all-ones agenda direction) voter i can reach on
/// issue j when share_num/share_den dollars are credited to the pair.
std::int64_t reachable_level(const Instance& inst, std::int64_t i, std::int64_t j,
                             std::int64_t share_num, std::int64_t share_den);

/// Throws std::invalid_argument unless the agenda is all ones.
void require_normalized(const Instance& inst);

/// Enumeration budget for brute-force searches; reads LOBBY_ENUM_LIMIT.
std::int64_t enum_limit();

}  // namespace lobby

#endif
