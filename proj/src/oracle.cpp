#include "lobby/oracle.hpp"

#include <algorithm>

namespace lobby {

namespace {

std::int64_t matched_weight(const Instance& inst, const Outcome& out) {
    std::int64_t w = 0;
    for (std::int64_t j = 0; j < inst.n; ++j)
        if (out.bits[j] == inst.agenda[j]) w += (*inst.weights)[j];
    return w;
}

// Goal predicate shared by the plain and weighted oracles.
bool goal_met(const Instance& scratch, Criterion criterion, bool weighted) {
    if (!weighted) return achieves_agenda(scratch, criterion);
    return matched_weight(scratch, evaluate(scratch, criterion)) >= *scratch.objective;
}

void check_budget_space(__int128 combos) {
    if (combos > enum_limit())
        throw InstanceTooLarge("oracle enumeration exceeds the configured limit");
}

std::vector<std::int64_t> voter_spend_candidates(const Instance& inst, std::int64_t i) {
    std::vector<std::int64_t> cands{0};
    for (std::int64_t j = 0; j < inst.n; ++j)
        for (const auto& c : inst.cost[i][j])
            if (c.has_value() && *c > 0) cands.push_back(checked_mul(*c, inst.n));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

std::vector<std::int64_t> issue_spend_candidates(const Instance& inst, std::int64_t j) {
    std::vector<std::int64_t> cands{0};
    for (std::int64_t i = 0; i < inst.m; ++i)
        for (const auto& c : inst.cost[i][j])
            if (c.has_value() && *c > 0) cands.push_back(checked_mul(*c, inst.m));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

SolveReport oracle_mb(const Instance& inst, Criterion criterion, bool weighted) {
    __int128 combos = 1;
    for (std::int64_t i = 0; i < inst.m; ++i)
        for (std::int64_t j = 0; j < inst.n; ++j)
            combos *= inst.k + 2 - inst.prob[i][j];
    check_budget_space(combos);

    Instance scratch = inst;
    MicroPlan cur{inst.prob};
    SolveReport rep;
    rep.solver = SolverTag::Oracle;

    auto rec = [&](auto&& self, std::int64_t pair, std::int64_t cost) -> void {
        if (rep.min_cost && cost >= *rep.min_cost) return;
        if (pair == inst.m * inst.n) {
            if (goal_met(scratch, criterion, weighted)) {
                rep.min_cost = cost;
                rep.plan = cur;
            }
            return;
        }
        const std::int64_t i = pair / inst.n, j = pair % inst.n;
        for (std::int64_t l = inst.prob[i][j]; l <= inst.k + 1; ++l) {
            scratch.prob[i][j] = l;
            cur.target[i][j] = l;
            self(self, pair + 1, cost + *inst.cost[i][j][l]);
        }
        scratch.prob[i][j] = inst.prob[i][j];
        cur.target[i][j] = inst.prob[i][j];
    };
    rec(rec, 0, 0);
    rep.feasible = rep.min_cost && *rep.min_cost <= inst.budget;
    return rep;
}

SolveReport oracle_vb(const Instance& inst, Criterion criterion, bool weighted) {
    std::vector<std::vector<std::int64_t>> cands(inst.m);
    __int128 combos = 1;
    for (std::int64_t i = 0; i < inst.m; ++i) {
        cands[i] = voter_spend_candidates(inst, i);
        combos *= cands[i].size();
    }
    check_budget_space(combos);

    Instance scratch = inst;
    VoterPlan cur{std::vector<std::int64_t>(inst.m, 0)};
    SolveReport rep;
    rep.solver = SolverTag::Oracle;

    auto set_voter = [&](std::int64_t i, std::int64_t d) {
        cur.dollars[i] = d;
        for (std::int64_t j = 0; j < inst.n; ++j)
            scratch.prob[i][j] = reachable_level(inst, i, j, d, inst.n);
    };
    auto rec = [&](auto&& self, std::int64_t i, std::int64_t cost) -> void {
        if (rep.min_cost && cost >= *rep.min_cost) return;
        if (i == inst.m) {
            if (goal_met(scratch, criterion, weighted)) {
                rep.min_cost = cost;
                rep.plan = cur;
            }
            return;
        }
        for (std::int64_t d : cands[i]) {
            set_voter(i, d);
            self(self, i + 1, checked_add(cost, d));
        }
        set_voter(i, 0);
    };
    rec(rec, 0, 0);
    rep.feasible = rep.min_cost && *rep.min_cost <= inst.budget;
    return rep;
}

SolveReport oracle_ib(const Instance& inst, Criterion criterion, bool weighted) {
    std::vector<std::vector<std::int64_t>> cands(inst.n);
    __int128 combos = 1;
    for (std::int64_t j = 0; j < inst.n; ++j) {
        cands[j] = issue_spend_candidates(inst, j);
        combos *= cands[j].size();
    }
    check_budget_space(combos);

    Instance scratch = inst;
    IssuePlan cur{std::vector<std::int64_t>(inst.n, 0)};
    SolveReport rep;
    rep.solver = SolverTag::Oracle;

    auto set_issue = [&](std::int64_t j, std::int64_t d) {
        cur.dollars[j] = d;
        for (std::int64_t i = 0; i < inst.m; ++i)
            scratch.prob[i][j] = reachable_level(inst, i, j, d, inst.m);
    };
    auto rec = [&](auto&& self, std::int64_t j, std::int64_t cost) -> void {
        if (rep.min_cost && cost >= *rep.min_cost) return;
        if (j == inst.n) {
            if (goal_met(scratch, criterion, weighted)) {
                rep.min_cost = cost;
                rep.plan = cur;
            }
            return;
        }
        for (std::int64_t d : cands[j]) {
            set_issue(j, d);
            self(self, j + 1, checked_add(cost, d));
        }
        set_issue(j, 0);
    };
    rec(rec, 0, 0);
    rep.feasible = rep.min_cost && *rep.min_cost <= inst.budget;
    return rep;
}

}  // namespace

SolveReport oracle_min_budget(const Instance& inst, Method method, Criterion criterion) {
    require_normalized(inst);
    switch (method) {
        case Method::MB: return oracle_mb(inst, criterion, false);
        case Method::IB: return oracle_ib(inst, criterion, false);
        case Method::VB: return oracle_vb(inst, criterion, false);
    }
    throw Error("unknown method");
}

SolveReport oracle_weighted(const Instance& inst, Method method, Criterion criterion) {
    require_normalized(inst);
    if (!inst.weights || !inst.objective)
        throw std::invalid_argument("weighted oracle needs weights and objective");
    switch (method) {
        case Method::MB: return oracle_mb(inst, criterion, true);
        case Method::IB: return oracle_ib(inst, criterion, true);
        case Method::VB: return oracle_vb(inst, criterion, true);
    }
    throw Error("unknown method");
}

bool oracle_exact_spend(const Instance& inst, Criterion criterion) {
    require_normalized(inst);
    __int128 combos = 1;
    for (std::int64_t i = 0; i < inst.m; ++i)
        for (std::int64_t j = 0; j < inst.n; ++j)
            combos *= inst.k + 2 - inst.prob[i][j];
    check_budget_space(combos);

    Instance scratch = inst;
    bool found = false;
    auto rec = [&](auto&& self, std::int64_t pair, std::int64_t cost) -> void {
        if (found || cost > inst.budget) return;
        if (pair == inst.m * inst.n) {
            if (cost == inst.budget && achieves_agenda(scratch, criterion)) found = true;
            return;
        }
        const std::int64_t i = pair / inst.n, j = pair % inst.n;
        for (std::int64_t l = inst.prob[i][j]; l <= inst.k + 1; ++l) {
            scratch.prob[i][j] = l;
            self(self, pair + 1, cost + *inst.cost[i][j][l]);
        }
        scratch.prob[i][j] = inst.prob[i][j];
    };
    rec(rec, 0, 0);
    return found;
}

}  // namespace lobby
