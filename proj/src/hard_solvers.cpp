#include "lobby/hard_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "lobby/poly_solvers.hpp"

namespace lobby {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t matched_weight(const Instance& inst, const Outcome& out) {
    std::int64_t w = 0;
    for (std::int64_t j = 0; j < inst.n; ++j)
        if (out.bits[j] == inst.agenda[j]) w += (*inst.weights)[j];
    return w;
}

// Spends worth considering for one voter: zero plus n*c for every positive
// price c in the voter's rows (anything between two such values reaches the
// same levels).
std::vector<std::int64_t> voter_candidates(const Instance& inst, std::int64_t i) {
    std::vector<std::int64_t> cands{0};
    for (std::int64_t j = 0; j < inst.n; ++j)
        for (const auto& c : inst.cost[i][j])
            if (c.has_value() && *c > 0) cands.push_back(checked_mul(*c, inst.n));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

SolveReport vb_search(const Instance& inst, Criterion criterion, bool weighted) {
    require_normalized(inst);
    std::vector<std::vector<std::int64_t>> cands(inst.m);
    __int128 combos = 1;
    for (std::int64_t i = 0; i < inst.m; ++i) {
        cands[i] = voter_candidates(inst, i);
        combos *= cands[i].size();
    }
    if (combos > enum_limit())
        throw InstanceTooLarge("voter-bribery search space exceeds the configured limit");

    Instance scratch = inst;
    VoterPlan cur{std::vector<std::int64_t>(inst.m, 0)};
    SolveReport rep;
    rep.solver = SolverTag::ExactBrute;

    auto goal = [&] {
        if (!weighted) return achieves_agenda(scratch, criterion);
        return matched_weight(scratch, evaluate(scratch, criterion)) >= *inst.objective;
    };
    auto set_voter = [&](std::int64_t i, std::int64_t d) {
        cur.dollars[i] = d;
        for (std::int64_t j = 0; j < inst.n; ++j)
            scratch.prob[i][j] = reachable_level(inst, i, j, d, inst.n);
    };
    auto rec = [&](auto&& self, std::int64_t i, std::int64_t spent) -> void {
        if (rep.min_cost && spent >= *rep.min_cost) return;  // bound
        if (i == inst.m) {
            if (goal()) {
                rep.min_cost = spent;
                rep.plan = cur;
            }
            return;
        }
        for (std::int64_t d : cands[i]) {
            set_voter(i, d);
            self(self, i + 1, checked_add(spent, d));
        }
        set_voter(i, 0);
    };
    rec(rec, 0, 0);
    rep.feasible = rep.min_cost && *rep.min_cost <= inst.budget;
    return rep;
}

}  // namespace

SolveReport solve_vb_exact(const Instance& inst, Criterion criterion) {
    return vb_search(inst, criterion, false);
}

SolveReport solve_weighted_vb_exact(const Instance& inst, Criterion criterion) {
    require_normalized(inst);
    if (!inst.weights || !inst.objective)
        throw std::invalid_argument("weighted solve needs weights and objective");
    return vb_search(inst, criterion, true);
}

Instance kernelize_vb(const Instance& inst, Criterion criterion) {
    require_normalized(inst);
    if (criterion != Criterion::SM) return inst;  // profile argument is SM-only

    const std::int64_t B = inst.budget;

    // W(i,j): minimum dollars on voter i that lift issue j over the
    // threshold; spends above the budget are as good as impossible.
    auto profile_of = [&](std::int64_t i) {
        std::vector<std::int64_t> w(inst.n, kInf);
        for (std::int64_t j = 0; j < inst.n; ++j) {
            for (std::int64_t l = inst.prob[i][j]; l <= inst.k + 1; ++l) {
                if (!level_above(inst, l)) continue;
                std::int64_t spend = checked_mul(*inst.cost[i][j][l], inst.n);
                if (spend <= B) w[j] = spend;
                break;
            }
        }
        return w;
    };

    std::vector<std::vector<std::int64_t>> profiles(inst.m);
    std::vector<std::vector<std::int64_t>> above(inst.m);  // issues won already
    for (std::int64_t i = 0; i < inst.m; ++i) {
        profiles[i] = profile_of(i);
        for (std::int64_t j = 0; j < inst.n; ++j)
            if (level_above(inst, inst.prob[i][j])) above[i].push_back(j);
    }

    // A surplus voter may be dropped only when doing so preserves every
    // issue's voter deficit (majority count minus voters already above):
    // with an even electorate the deficit is invariant exactly on the
    // voter's above-issues, with an odd electorate exactly off them.
    std::vector<bool> alive(inst.m, true);
    std::int64_t m_cur = inst.m;
    std::vector<std::int64_t> have(inst.n, 0);
    for (std::int64_t i = 0; i < inst.m; ++i)
        for (std::int64_t j : above[i]) ++have[j];

    std::map<std::vector<std::int64_t>, std::int64_t> profile_count;
    for (std::int64_t i = 0; i < inst.m; ++i) ++profile_count[profiles[i]];

    auto deficit = [&](std::int64_t j) { return m_cur / 2 + 1 - have[j]; };
    auto safe_to_drop = [&](std::int64_t i) {
        if (m_cur % 2 == 0) {
            // Deficits shrink by one off the voter's above-set; harmless
            // only where the issue is already won.
            std::vector<bool> is_above(inst.n, false);
            for (std::int64_t j : above[i]) is_above[j] = true;
            for (std::int64_t j = 0; j < inst.n; ++j)
                if (!is_above[j] && deficit(j) > 0) return false;
            return true;
        }
        // Odd electorate: deficits grow by one on the above-set.
        for (std::int64_t j : above[i])
            if (deficit(j) > -1) return false;
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::int64_t i = 0; i < inst.m; ++i) {
            if (!alive[i] || profile_count[profiles[i]] <= B) continue;
            if (!safe_to_drop(i)) continue;
            alive[i] = false;
            --m_cur;
            --profile_count[profiles[i]];
            for (std::int64_t j : above[i]) --have[j];
            changed = true;
        }
    }

    Instance out = inst;
    out.prob.clear();
    out.cost.clear();
    for (std::int64_t i = 0; i < inst.m; ++i) {
        if (!alive[i]) continue;
        out.prob.push_back(inst.prob[i]);
        out.cost.push_back(inst.cost[i]);
    }
    out.m = m_cur;
    return out;
}

namespace {

// Per-issue deficits of the current level matrix: level raises still needed
// (AM) or voters still missing from the majority (SM). Returns nullopt when
// some issue is unwinnable.
std::optional<std::vector<std::int64_t>> deficits_at(
    const Instance& inst, const std::vector<std::vector<std::int64_t>>& levels,
    Criterion criterion) {
    std::vector<std::int64_t> out(inst.n, 0);
    const std::int64_t top = inst.k + 1;
    for (std::int64_t j = 0; j < inst.n; ++j) {
        if (criterion == Criterion::AM) {
            std::int64_t sum = 0;
            for (std::int64_t i = 0; i < inst.m; ++i) sum += levels[i][j];
            const std::int64_t denom = top * inst.m;
            std::int64_t b = 0;
            while (b <= denom - sum &&
                   !above_threshold(sum + b, denom, inst.threshold.num,
                                    inst.threshold.den, inst.comparison))
                ++b;
            if (b > denom - sum) return std::nullopt;
            out[j] = b;
        } else {
            std::int64_t cnt = 0;
            for (std::int64_t i = 0; i < inst.m; ++i)
                if (level_above(inst, levels[i][j])) ++cnt;
            std::int64_t need = inst.m / 2 + 1 - cnt;
            if (need > 0 && !level_above(inst, top)) return std::nullopt;
            out[j] = std::max<std::int64_t>(0, need);
        }
    }
    return out;
}

}  // namespace

VoterPlan trace_plan(const GreedyTrace& trace, std::int64_t m) {
    VoterPlan plan{std::vector<std::int64_t>(m, 0)};
    for (const auto& s : trace.steps)
        plan.dollars[s.voter] = checked_add(plan.dollars[s.voter], s.dollars);
    return plan;
}

std::optional<GreedyTrace> greedy_vb(const Instance& inst, Criterion criterion) {
    require_normalized(inst);

    std::vector<std::int64_t> credit(inst.m, 0);
    auto level_at = [&](std::int64_t i, std::int64_t j) {
        return reachable_level(inst, i, j, credit[i], inst.n);
    };
    auto all_levels = [&] {
        std::vector<std::vector<std::int64_t>> lv(inst.m,
                                                  std::vector<std::int64_t>(inst.n));
        for (std::int64_t i = 0; i < inst.m; ++i)
            for (std::int64_t j = 0; j < inst.n; ++j) lv[i][j] = level_at(i, j);
        return lv;
    };

    auto initial = deficits_at(inst, inst.prob, criterion);
    if (!initial) return std::nullopt;

    GreedyTrace trace;
    for (std::int64_t d : *initial) trace.cover_total += d;
    trace.ratio_bound =
        trace.cover_total > 0 ? std::log(static_cast<double>(trace.cover_total)) + 1.0
                              : 1.0;

    while (true) {
        auto levels = all_levels();
        auto defs = deficits_at(inst, levels, criterion);
        if (!defs) return std::nullopt;
        std::vector<std::int64_t> unwon;
        for (std::int64_t j = 0; j < inst.n; ++j)
            if ((*defs)[j] > 0) unwon.push_back(j);
        if (unwon.empty()) break;

        // Best (voter, spend): minimize spend per influenced referendum.
        struct Pick {
            std::int64_t voter = -1;
            std::int64_t spend = 0;
            std::int64_t count = 0;
            std::vector<std::int64_t> raised;
        } best;

        auto consider = [&](std::int64_t i, std::int64_t d) {
            std::int64_t cnt = 0;
            std::vector<std::int64_t> raised;
            for (std::int64_t j : unwon) {
                std::int64_t after = reachable_level(inst, i, j, credit[i] + d, inst.n);
                bool influenced = criterion == Criterion::AM
                                      ? after > levels[i][j]
                                      : (!level_above(inst, levels[i][j]) &&
                                         level_above(inst, after));
                if (influenced) {
                    ++cnt;
                    raised.push_back(j);
                }
            }
            if (cnt == 0) return;
            bool better =
                best.voter < 0 ||
                cmp_frac(d, cnt, best.spend, best.count) < 0 ||
                (cmp_frac(d, cnt, best.spend, best.count) == 0 &&
                 (i < best.voter || (i == best.voter && d < best.spend)));
            if (better) best = {i, d, cnt, std::move(raised)};
        };

        for (std::int64_t i = 0; i < inst.m; ++i) {
            if (criterion == Criterion::AM) {
                // Least money raising any level of an unwon referendum.
                std::int64_t d_min = kInf;
                for (std::int64_t j : unwon) {
                    std::int64_t l = levels[i][j];
                    if (l >= inst.k + 1) continue;
                    std::int64_t need =
                        checked_mul(*inst.cost[i][j][l + 1], inst.n) - credit[i];
                    d_min = std::min(d_min, need);
                }
                if (d_min != kInf && d_min > 0) consider(i, d_min);
            } else {
                // One candidate spend per unwon referendum this voter could
                // newly cross.
                for (std::int64_t j : unwon) {
                    if (level_above(inst, levels[i][j])) continue;
                    for (std::int64_t l = levels[i][j] + 1; l <= inst.k + 1; ++l) {
                        if (!level_above(inst, l)) continue;
                        std::int64_t d =
                            checked_mul(*inst.cost[i][j][l], inst.n) - credit[i];
                        if (d > 0) consider(i, d);
                        break;
                    }
                }
            }
        }
        if (best.voter < 0) return std::nullopt;

        credit[best.voter] = checked_add(credit[best.voter], best.spend);
        trace.total_cost = checked_add(trace.total_cost, best.spend);
        trace.steps.push_back({best.voter, best.spend, std::move(best.raised)});
    }
    return trace;
}

SolveReport solve_weighted_mb_ib(const Instance& inst, Method method,
                                 Criterion criterion) {
    require_normalized(inst);
    if (!inst.weights || !inst.objective)
        throw std::invalid_argument("weighted solve needs weights and objective");
    if (method == Method::VB)
        throw std::invalid_argument("weighted VB is handled by solve_weighted_vb_exact");

    SolveReport rep;
    rep.solver = SolverTag::KnapsackDp;

    // Per-issue minimum winning cost; unwinnable issues are simply excluded
    // from the knapsack.
    std::vector<std::int64_t> item_cost(inst.n, kInf);
    std::vector<IssueMicroSolve> micro(inst.n);
    for (std::int64_t j = 0; j < inst.n; ++j) {
        try {
            if (method == Method::MB) {
                micro[j] = mb_issue_solve(inst, j, criterion);
                item_cost[j] = micro[j].cost;
            } else {
                item_cost[j] = ib_issue_cost(inst, j, criterion);
            }
        } catch (const InfeasibleIssue&) {
        }
    }
    rep.per_issue_cost = item_cost;

    const std::int64_t B = inst.budget;
    if ((inst.n + 1) * (B + 1) > enum_limit())
        throw InstanceTooLarge("knapsack table exceeds the configured limit");

    // dp[c] = max total weight of won issues with at most c dollars.
    std::vector<std::int64_t> dp(B + 1, 0);
    std::vector<std::vector<bool>> took(inst.n, std::vector<bool>(B + 1, false));
    for (std::int64_t j = 0; j < inst.n; ++j) {
        if (item_cost[j] == kInf || item_cost[j] > B) continue;
        const std::int64_t w = (*inst.weights)[j];
        for (std::int64_t c = B; c >= item_cost[j]; --c) {
            if (dp[c - item_cost[j]] + w > dp[c]) {
                dp[c] = dp[c - item_cost[j]] + w;
                took[j][c] = true;
            }
        }
    }

    const std::int64_t O = *inst.objective;
    std::optional<std::int64_t> min_cost;
    for (std::int64_t c = 0; c <= B; ++c)
        if (dp[c] >= O) {
            min_cost = c;
            break;
        }
    rep.feasible = min_cost.has_value();
    if (!rep.feasible) return rep;
    rep.min_cost = *min_cost;

    // Reconstruct the chosen issue set at the winning cost.
    std::vector<bool> chosen(inst.n, false);
    std::int64_t c = *min_cost;
    for (std::int64_t j = inst.n - 1; j >= 0; --j) {
        if (item_cost[j] == kInf || item_cost[j] > B) continue;
        if (took[j][c]) {
            chosen[j] = true;
            c -= item_cost[j];
        }
    }

    if (method == Method::MB) {
        MicroPlan plan{inst.prob};
        for (std::int64_t j = 0; j < inst.n; ++j)
            if (chosen[j])
                for (std::int64_t i = 0; i < inst.m; ++i)
                    plan.target[i][j] = micro[j].targets[i];
        rep.plan = std::move(plan);
    } else {
        IssuePlan plan{std::vector<std::int64_t>(inst.n, 0)};
        for (std::int64_t j = 0; j < inst.n; ++j)
            if (chosen[j]) plan.dollars[j] = item_cost[j];
        rep.plan = std::move(plan);
    }
    return rep;
}

SolveReport solve_exact_mb(const Instance& inst, Criterion criterion) {
    require_normalized(inst);
    __int128 combos = 1;
    for (std::int64_t i = 0; i < inst.m; ++i)
        for (std::int64_t j = 0; j < inst.n; ++j)
            combos *= inst.k + 2 - inst.prob[i][j];
    if (combos > enum_limit())
        throw InstanceTooLarge("exact-spend search space exceeds the configured limit");

    Instance scratch = inst;
    MicroPlan cur{inst.prob};
    SolveReport rep;
    rep.solver = SolverTag::ExactBrute;

    auto rec = [&](auto&& self, std::int64_t pair, std::int64_t spent) -> void {
        if (rep.feasible || spent > inst.budget) return;
        if (pair == inst.m * inst.n) {
            if (spent == inst.budget && achieves_agenda(scratch, criterion)) {
                rep.feasible = true;
                rep.min_cost = spent;
                rep.plan = cur;
            }
            return;
        }
        const std::int64_t i = pair / inst.n, j = pair % inst.n;
        for (std::int64_t l = inst.prob[i][j]; l <= inst.k + 1; ++l) {
            scratch.prob[i][j] = l;
            cur.target[i][j] = l;
            self(self, pair + 1, spent + *inst.cost[i][j][l]);
        }
        scratch.prob[i][j] = inst.prob[i][j];
        cur.target[i][j] = inst.prob[i][j];
    };
    rec(rec, 0, 0);
    return rep;
}

}  // namespace lobby
