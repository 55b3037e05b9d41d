#include "lobby/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lobby {

namespace {

std::string pair_str(std::int64_t i, std::int64_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

bool Instance::normalized() const {
    return std::all_of(agenda.begin(), agenda.end(), [](int z) { return z == 1; });
}

void require_normalized(const Instance& inst) {
    if (!inst.normalized())
        throw std::invalid_argument("operation requires an all-ones agenda; call normalize_agenda first");
}

std::int64_t enum_limit() {
    if (const char* env = std::getenv("LOBBY_ENUM_LIMIT")) {
        std::int64_t v = std::strtoll(env, nullptr, 10);
        if (v > 0) return v;
    }
    return 10'000'000;
}

Instance validate_instance(Instance inst) {
    const auto shape = [](const std::string& msg) {
        return ValidationError(ValidationError::Code::ShapeMismatch, msg);
    };
    if (inst.m < 1 || inst.n < 1 || inst.k < 0) throw shape("need m >= 1, n >= 1, k >= 0");
    if (inst.budget < 0) throw shape("budget must be nonnegative");
    if (inst.threshold.den < 1 || inst.threshold.num < 0 ||
        inst.threshold.num > inst.threshold.den)
        throw shape("threshold must be a rational in [0,1]");
    if (static_cast<std::int64_t>(inst.agenda.size()) != inst.n)
        throw shape("agenda length != n");
    for (int z : inst.agenda)
        if (z != 0 && z != 1) throw shape("agenda entries must be 0/1");
    if (static_cast<std::int64_t>(inst.prob.size()) != inst.m ||
        static_cast<std::int64_t>(inst.cost.size()) != inst.m)
        throw shape("probability/cost matrix row count != m");

    const std::int64_t top = inst.k + 1;
    for (std::int64_t i = 0; i < inst.m; ++i) {
        if (static_cast<std::int64_t>(inst.prob[i].size()) != inst.n ||
            static_cast<std::int64_t>(inst.cost[i].size()) != inst.n)
            throw shape("row " + std::to_string(i) + " has wrong column count");
        for (std::int64_t j = 0; j < inst.n; ++j) {
            const std::int64_t base = inst.prob[i][j];
            if (base < 0 || base > top)
                throw shape("probability level out of range at " + pair_str(i, j));
            const CostRow& row = inst.cost[i][j];
            if (static_cast<std::int64_t>(row.size()) != inst.k + 2)
                throw shape("cost row at " + pair_str(i, j) + " must have k+2 entries");

            if (!row[base].has_value() || *row[base] != 0)
                throw ValidationError(ValidationError::Code::NonzeroBaseCost,
                                      "cost at own level must be present and zero at " + pair_str(i, j));

            // Entries in the agenda direction must be present.
            const bool up = inst.agenda[j] == 1;
            for (std::int64_t l = up ? base : 0; l <= (up ? top : base); ++l)
                if (!row[l].has_value())
                    throw ValidationError(ValidationError::Code::MissingAgendaSideCost,
                                          "missing agenda-side cost at " + pair_str(i, j) +
                                              " level " + std::to_string(l));

            // Monotone away from the base on both sides; zero only at the base.
            for (std::int64_t l = 0; l <= top; ++l) {
                if (!row[l].has_value()) continue;
                if (*row[l] < 0)
                    throw shape("negative cost at " + pair_str(i, j));
                if (l != base && *row[l] == 0)
                    throw ValidationError(ValidationError::Code::NonMonotoneCost,
                                          "zero cost off the base level at " + pair_str(i, j));
            }
            auto check_side = [&](std::int64_t from, std::int64_t to, std::int64_t step) {
                std::int64_t prev = 0;
                for (std::int64_t l = from; l != to + step; l += step) {
                    if (!row[l].has_value()) continue;
                    if (*row[l] < prev)
                        throw ValidationError(ValidationError::Code::NonMonotoneCost,
                                              "cost not monotone away from base at " + pair_str(i, j));
                    prev = *row[l];
                }
            };
            check_side(base, top, 1);
            check_side(base, 0, -1);
        }
    }

    if (inst.weights.has_value() != inst.objective.has_value())
        throw shape("weights and objective must be given together");
    if (inst.weights) {
        if (static_cast<std::int64_t>(inst.weights->size()) != inst.n)
            throw shape("weights length != n");
        for (std::int64_t w : *inst.weights)
            if (w <= 0) throw shape("weights must be positive");
        if (*inst.objective < 0) throw shape("objective must be nonnegative");
    }
    return inst;
}

Instance normalize_agenda(Instance inst) {
    const std::int64_t top = inst.k + 1;
    for (std::int64_t j = 0; j < inst.n; ++j) {
        if (inst.agenda[j] == 1) continue;
        for (std::int64_t i = 0; i < inst.m; ++i) {
            inst.prob[i][j] = top - inst.prob[i][j];
            std::reverse(inst.cost[i][j].begin(), inst.cost[i][j].end());
        }
        inst.agenda[j] = 1;
    }
    return inst;
}

bool level_above(const Instance& inst, std::int64_t level) {
    return above_threshold(level, inst.grid_denom(), inst.threshold.num,
                           inst.threshold.den, inst.comparison);
}

namespace {

// Voter level measured toward the agenda: mirrored for agenda-0 issues.
std::int64_t toward_level(const Instance& inst, std::int64_t i, std::int64_t j) {
    std::int64_t a = inst.prob[i][j];
    return inst.agenda[j] == 1 ? a : inst.k + 1 - a;
}

bool issue_won_toward(const Instance& inst, std::int64_t j, Criterion criterion) {
    if (criterion == Criterion::SM) {
        std::int64_t cnt = 0;
        for (std::int64_t i = 0; i < inst.m; ++i)
            if (level_above(inst, toward_level(inst, i, j))) ++cnt;
        return 2 * cnt > inst.m;
    }
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < inst.m; ++i) sum += toward_level(inst, i, j);
    return above_threshold(sum, inst.grid_denom() * inst.m, inst.threshold.num,
                           inst.threshold.den, inst.comparison);
}

}  // namespace

Outcome evaluate(const Instance& inst, Criterion criterion) {
    Outcome out;
    out.bits.resize(inst.n);
    for (std::int64_t j = 0; j < inst.n; ++j) {
        bool won = issue_won_toward(inst, j, criterion);
        out.bits[j] = won ? inst.agenda[j] : 1 - inst.agenda[j];
    }
    return out;
}

bool achieves_agenda(const Instance& inst, Criterion criterion) {
    Outcome out = evaluate(inst, criterion);
    for (std::int64_t j = 0; j < inst.n; ++j)
        if (out.bits[j] != inst.agenda[j]) return false;
    return true;
}

std::int64_t reachable_level(const Instance& inst, std::int64_t i, std::int64_t j,
                             std::int64_t share_num, std::int64_t share_den) {
    const std::int64_t base = inst.prob[i][j];
    const std::int64_t step = inst.agenda[j] == 1 ? 1 : -1;
    const std::int64_t end = inst.agenda[j] == 1 ? inst.k + 1 : 0;
    std::int64_t level = base;
    while (level != end) {
        const auto& c = inst.cost[i][j][level + step];
        if (!c.has_value() || cmp_frac(*c, 1, share_num, share_den) > 0) break;
        level += step;
    }
    return level;
}

namespace {

// Rewrites one cost row after bribery: entries behind the new base become
// unimportant, the new base costs zero, entries ahead are reduced by the
// credited share (integer floor), never below zero.
CostRow rebase_row(const CostRow& row, std::int64_t new_base, std::int64_t step,
                   std::int64_t credit_num, std::int64_t credit_den) {
    CostRow out(row.size(), std::nullopt);
    out[new_base] = 0;
    const std::int64_t credit = credit_num / credit_den;
    for (std::int64_t l = new_base + step;
         l >= 0 && l < static_cast<std::int64_t>(row.size()); l += step) {
        if (row[l].has_value()) out[l] = std::max<std::int64_t>(0, *row[l] - credit);
    }
    return out;
}

}  // namespace

Instance apply_bribery(const Instance& inst, const BriberyPlan& plan) {
    Instance out = inst;
    if (const auto* mp = std::get_if<MicroPlan>(&plan)) {
        if (static_cast<std::int64_t>(mp->target.size()) != inst.m)
            throw WrongDirection("micro plan shape mismatch");
        for (std::int64_t i = 0; i < inst.m; ++i) {
            if (static_cast<std::int64_t>(mp->target[i].size()) != inst.n)
                throw WrongDirection("micro plan shape mismatch");
            for (std::int64_t j = 0; j < inst.n; ++j) {
                const std::int64_t base = inst.prob[i][j];
                const std::int64_t tgt = mp->target[i][j];
                const std::int64_t step = inst.agenda[j] == 1 ? 1 : -1;
                const bool ok = inst.agenda[j] == 1 ? (tgt >= base && tgt <= inst.k + 1)
                                                    : (tgt <= base && tgt >= 0);
                if (!ok)
                    throw WrongDirection("micro target opposite the agenda at " + pair_str(i, j));
                const std::int64_t paid = inst.cost[i][j][tgt].value_or(0);
                out.prob[i][j] = tgt;
                out.cost[i][j] = rebase_row(inst.cost[i][j], tgt, step, paid, 1);
            }
        }
        return out;
    }
    if (const auto* ip = std::get_if<IssuePlan>(&plan)) {
        if (static_cast<std::int64_t>(ip->dollars.size()) != inst.n)
            throw WrongDirection("issue plan shape mismatch");
        for (std::int64_t j = 0; j < inst.n; ++j) {
            const std::int64_t d = ip->dollars[j];
            if (d < 0) throw WrongDirection("negative issue spend");
            const std::int64_t step = inst.agenda[j] == 1 ? 1 : -1;
            for (std::int64_t i = 0; i < inst.m; ++i) {
                const std::int64_t lvl = reachable_level(inst, i, j, d, inst.m);
                out.prob[i][j] = lvl;
                out.cost[i][j] = rebase_row(inst.cost[i][j], lvl, step, d, inst.m);
            }
        }
        return out;
    }
    const auto& vp = std::get<VoterPlan>(plan);
    if (static_cast<std::int64_t>(vp.dollars.size()) != inst.m)
        throw WrongDirection("voter plan shape mismatch");
    for (std::int64_t i = 0; i < inst.m; ++i) {
        const std::int64_t d = vp.dollars[i];
        if (d < 0) throw WrongDirection("negative voter spend");
        for (std::int64_t j = 0; j < inst.n; ++j) {
            const std::int64_t step = inst.agenda[j] == 1 ? 1 : -1;
            const std::int64_t lvl = reachable_level(inst, i, j, d, inst.n);
            out.prob[i][j] = lvl;
            out.cost[i][j] = rebase_row(inst.cost[i][j], lvl, step, d, inst.n);
        }
    }
    return out;
}

std::int64_t plan_cost(const Instance& inst, const BriberyPlan& plan) {
    std::int64_t total = 0;
    if (const auto* mp = std::get_if<MicroPlan>(&plan)) {
        for (std::int64_t i = 0; i < inst.m; ++i)
            for (std::int64_t j = 0; j < inst.n; ++j) {
                const auto& c = inst.cost[i][j][mp->target[i][j]];
                if (!c.has_value())
                    throw WrongDirection("micro target has no price at " + pair_str(i, j));
                total = checked_add(total, *c);
            }
        return total;
    }
    const auto& dollars = std::holds_alternative<IssuePlan>(plan)
                              ? std::get<IssuePlan>(plan).dollars
                              : std::get<VoterPlan>(plan).dollars;
    for (std::int64_t d : dollars) {
        if (d < 0) throw WrongDirection("negative spend");
        total = checked_add(total, d);
    }
    return total;
}

CoverProfile cover_numbers(const Instance& inst, Criterion criterion) {
    require_normalized(inst);
    CoverProfile cp;
    cp.per_issue.resize(inst.n);
    const std::int64_t top = inst.k + 1;
    for (std::int64_t j = 0; j < inst.n; ++j) {
        std::int64_t need;
        if (criterion == Criterion::AM) {
            std::int64_t sum = 0;
            for (std::int64_t i = 0; i < inst.m; ++i) sum += inst.prob[i][j];
            const std::int64_t denom = top * inst.m;
            // Smallest b with (sum + b)/denom above the threshold.
            __int128 scaled = static_cast<__int128>(inst.threshold.num) * denom;
            std::int64_t min_total;
            if (inst.comparison == Comparison::Strict)
                min_total = static_cast<std::int64_t>(scaled / inst.threshold.den) + 1;
            else
                min_total = static_cast<std::int64_t>(
                    (scaled + inst.threshold.den - 1) / inst.threshold.den);
            need = std::max<std::int64_t>(0, min_total - sum);
            if (need > denom - sum)
                throw Infeasible("issue " + std::to_string(j) +
                                 " cannot reach the threshold even at full headroom");
        } else {
            const std::int64_t majority = inst.m / 2 + 1;
            std::int64_t have = 0;
            for (std::int64_t i = 0; i < inst.m; ++i)
                if (level_above(inst, inst.prob[i][j])) ++have;
            need = std::max<std::int64_t>(0, majority - have);
            if (need > 0 && !level_above(inst, top))
                throw Infeasible("issue " + std::to_string(j) +
                                 " cannot gain voters: probability one is not above the threshold");
        }
        cp.per_issue[j] = need;
        cp.total += need;
    }
    return cp;
}

}  // namespace lobby
