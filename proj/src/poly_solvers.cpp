#include "lobby/poly_solvers.hpp"

#include <algorithm>
#include <string>

#include "lobby/path_schedule.hpp"

namespace lobby {

namespace {

struct IssueSolve {
    std::int64_t cost = 0;
    std::vector<std::int64_t> targets;  // per-voter level, MB solvers only
};

// Cheapest level at which voter i crosses the threshold on issue j, with its
// price; nullopt if no level lies above the threshold.
std::optional<std::pair<std::int64_t, std::int64_t>> crossing(const Instance& inst,
                                                              std::int64_t i,
                                                              std::int64_t j) {
    const std::int64_t base = inst.prob[i][j];
    for (std::int64_t l = base; l <= inst.k + 1; ++l)
        if (level_above(inst, l)) return std::make_pair(l, *inst.cost[i][j][l]);
    return std::nullopt;
}

IssueSolve mb_sm_issue(const Instance& inst, std::int64_t j) {
    struct Cand {
        std::int64_t price;
        std::int64_t voter;
        std::int64_t level;
    };
    std::vector<Cand> cands;
    for (std::int64_t i = 0; i < inst.m; ++i)
        if (auto c = crossing(inst, i, j)) cands.push_back({c->second, i, c->first});

    const std::int64_t majority = inst.m / 2 + 1;
    if (static_cast<std::int64_t>(cands.size()) < majority)
        throw InfeasibleIssue("issue " + std::to_string(j) +
                              ": no majority can cross the threshold");
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.price != b.price ? a.price < b.price : a.voter < b.voter;
    });

    IssueSolve s;
    s.targets.resize(inst.m);
    for (std::int64_t i = 0; i < inst.m; ++i) s.targets[i] = inst.prob[i][j];
    for (std::int64_t r = 0; r < majority; ++r) {
        s.cost = checked_add(s.cost, cands[r].price);
        s.targets[cands[r].voter] = cands[r].level;
    }
    return s;
}

IssueSolve mb_am_issue(const Instance& inst, std::int64_t j) {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < inst.m; ++i) sum += inst.prob[i][j];
    const std::int64_t denom = (inst.k + 1) * inst.m;
    std::int64_t steps = 0;
    while (steps <= denom - sum &&
           !above_threshold(sum + steps, denom, inst.threshold.num, inst.threshold.den,
                            inst.comparison))
        ++steps;
    if (steps > denom - sum)
        throw InfeasibleIssue("issue " + std::to_string(j) +
                              ": average cannot reach the threshold");

    ScheduleInstance si;
    si.q = steps;
    for (std::int64_t i = 0; i < inst.m; ++i) {
        std::vector<std::int64_t> path;
        for (std::int64_t l = inst.prob[i][j] + 1; l <= inst.k + 1; ++l)
            path.push_back(*inst.cost[i][j][l] - *inst.cost[i][j][l - 1]);
        si.paths.push_back(std::move(path));
    }
    auto res = min_cost_schedule_with_counts(si);
    if (!res)
        throw InfeasibleIssue("issue " + std::to_string(j) + ": not enough headroom");

    IssueSolve s;
    s.cost = res->cost;
    s.targets.resize(inst.m);
    for (std::int64_t i = 0; i < inst.m; ++i)
        s.targets[i] = inst.prob[i][j] + res->prefix_len[i];
    return s;
}

bool issue_won_at(const Instance& inst, std::int64_t j,
                  const std::vector<std::int64_t>& levels, Criterion criterion) {
    if (criterion == Criterion::SM) {
        std::int64_t cnt = 0;
        for (std::int64_t lvl : levels)
            if (level_above(inst, lvl)) ++cnt;
        return 2 * cnt > inst.m;
    }
    std::int64_t sum = 0;
    for (std::int64_t lvl : levels) sum += lvl;
    (void)j;
    return above_threshold(sum, (inst.k + 1) * inst.m, inst.threshold.num,
                           inst.threshold.den, inst.comparison);
}

std::int64_t ib_issue(const Instance& inst, std::int64_t j, Criterion criterion) {
    // The level each voter reaches is a step function of d/m, so only spends
    // of the form m*c (c a column cost entry) can be optimal.
    std::vector<std::int64_t> cands{0};
    for (std::int64_t i = 0; i < inst.m; ++i)
        for (const auto& c : inst.cost[i][j])
            if (c.has_value() && *c > 0) cands.push_back(checked_mul(*c, inst.m));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::vector<std::int64_t> levels(inst.m);
    for (std::int64_t d : cands) {
        for (std::int64_t i = 0; i < inst.m; ++i)
            levels[i] = reachable_level(inst, i, j, d, inst.m);
        if (issue_won_at(inst, j, levels, criterion)) return d;
    }
    throw InfeasibleIssue("issue " + std::to_string(j) +
                          ": unwinnable by issue bribery");
}

}  // namespace

IssueMicroSolve mb_issue_solve(const Instance& inst, std::int64_t j, Criterion criterion) {
    require_normalized(inst);
    IssueSolve s = criterion == Criterion::SM ? mb_sm_issue(inst, j)
                                              : mb_am_issue(inst, j);
    return IssueMicroSolve{s.cost, std::move(s.targets)};
}

std::int64_t ib_issue_cost(const Instance& inst, std::int64_t j, Criterion criterion) {
    require_normalized(inst);
    return ib_issue(inst, j, criterion);
}

namespace {

SolveReport solve_mb(const Instance& inst, Criterion criterion) {
    require_normalized(inst);
    SolveReport rep;
    rep.solver = SolverTag::ExactPoly;
    MicroPlan plan;
    plan.target = inst.prob;
    std::int64_t total = 0;
    for (std::int64_t j = 0; j < inst.n; ++j) {
        IssueSolve s = criterion == Criterion::SM ? mb_sm_issue(inst, j)
                                                  : mb_am_issue(inst, j);
        rep.per_issue_cost.push_back(s.cost);
        total = checked_add(total, s.cost);
        for (std::int64_t i = 0; i < inst.m; ++i) plan.target[i][j] = s.targets[i];
    }
    rep.min_cost = total;
    rep.feasible = total <= inst.budget;
    rep.plan = std::move(plan);
    return rep;
}

}  // namespace

SolveReport solve_mb_sm(const Instance& inst) { return solve_mb(inst, Criterion::SM); }

SolveReport solve_mb_am(const Instance& inst) { return solve_mb(inst, Criterion::AM); }

SolveReport solve_ib(const Instance& inst, Criterion criterion) {
    require_normalized(inst);
    SolveReport rep;
    rep.solver = SolverTag::ExactPoly;
    IssuePlan plan;
    std::int64_t total = 0;
    for (std::int64_t j = 0; j < inst.n; ++j) {
        std::int64_t d = ib_issue(inst, j, criterion);
        rep.per_issue_cost.push_back(d);
        plan.dollars.push_back(d);
        total = checked_add(total, d);
    }
    rep.min_cost = total;
    rep.feasible = total <= inst.budget;
    rep.plan = std::move(plan);
    return rep;
}

}  // namespace lobby
