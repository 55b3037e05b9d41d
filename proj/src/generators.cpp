#include "lobby/generators.hpp"

#include <random>
#include <stdexcept>

namespace lobby {

Instance gen_random(const GenConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };

    Instance inst;
    inst.m = uniform(cfg.m_min, cfg.m_max);
    inst.n = uniform(cfg.n_min, cfg.n_max);
    inst.k = uniform(cfg.k_min, cfg.k_max);
    inst.threshold = cfg.threshold;
    inst.comparison = cfg.comparison;
    inst.budget = uniform(0, cfg.max_budget);

    inst.agenda.assign(inst.n, 1);
    if (cfg.agenda == AgendaPolicy::Random)
        for (auto& z : inst.agenda) z = static_cast<int>(uniform(0, 1));

    const std::int64_t top = inst.k + 1;
    inst.prob.assign(inst.m, std::vector<std::int64_t>(inst.n));
    inst.cost.assign(inst.m, std::vector<CostRow>(inst.n));
    for (std::int64_t i = 0; i < inst.m; ++i) {
        for (std::int64_t j = 0; j < inst.n; ++j) {
            const std::int64_t base = uniform(0, top);
            inst.prob[i][j] = base;
            CostRow row(inst.k + 2, std::nullopt);
            row[base] = 0;
            // Monotone by construction: positive random increments away from
            // the base, agenda side only.
            const std::int64_t step = inst.agenda[j] == 1 ? 1 : -1;
            std::int64_t cum = 0;
            for (std::int64_t l = base + step; l >= 0 && l <= top; l += step) {
                cum += uniform(1, cfg.max_cost);
                row[l] = cum;
            }
            inst.cost[i][j] = std::move(row);
        }
    }

    if (cfg.weighted) {
        std::vector<std::int64_t> w(inst.n);
        std::int64_t total = 0;
        for (auto& x : w) {
            x = uniform(1, cfg.max_weight);
            total += x;
        }
        inst.weights = std::move(w);
        inst.objective = uniform(0, total);
    }
    return validate_instance(std::move(inst));
}

Instance from_subset_sum(const std::vector<std::int64_t>& a, std::int64_t S) {
    if (a.empty()) throw std::invalid_argument("subset-sum source must be nonempty");
    const std::int64_t z = static_cast<std::int64_t>(a.size());

    Instance inst;
    inst.k = 0;
    inst.m = 2 * z;
    inst.n = 1;
    inst.agenda = {1};
    inst.threshold = {1, 2};
    inst.comparison = Comparison::Strict;
    inst.budget = S;
    inst.prob.assign(inst.m, {0});
    inst.cost.assign(inst.m, {CostRow(2)});
    for (std::int64_t i = 0; i < z; ++i) {
        inst.prob[i][0] = 1;  // already accepts
        inst.cost[i][0] = {std::nullopt, 0};
    }
    for (std::int64_t i = 0; i < z; ++i) {
        inst.prob[z + i][0] = 0;
        inst.cost[z + i][0] = {0, a[i]};  // flip price = source element
    }
    return validate_instance(std::move(inst));
}

Instance from_knapsack(const std::vector<std::int64_t>& w,
                       const std::vector<std::int64_t>& p, std::int64_t W,
                       std::int64_t P) {
    if (w.size() != p.size()) throw std::invalid_argument("weights/profits length mismatch");

    Instance inst;
    inst.k = 0;
    inst.m = 1;
    inst.n = static_cast<std::int64_t>(w.size());
    inst.agenda.assign(inst.n, 1);
    inst.threshold = {1, 2};
    inst.comparison = Comparison::Strict;
    inst.budget = W;
    inst.prob.assign(1, std::vector<std::int64_t>(inst.n, 0));
    inst.cost.assign(1, std::vector<CostRow>(inst.n));
    for (std::int64_t j = 0; j < inst.n; ++j) inst.cost[0][j] = {0, w[j]};
    inst.weights = p;
    inst.objective = P;
    return validate_instance(std::move(inst));
}

Instance from_optimal_lobbying(const std::vector<std::vector<int>>& E,
                               const std::vector<int>& Z, std::int64_t b) {
    const std::int64_t m = static_cast<std::int64_t>(E.size());
    if (m == 0) throw std::invalid_argument("empty voting matrix");
    const std::int64_t n = static_cast<std::int64_t>(E[0].size());
    if (static_cast<std::int64_t>(Z.size()) != n)
        throw std::invalid_argument("target length mismatch");

    Instance inst;
    inst.k = 0;
    inst.m = m;
    inst.n = n;
    inst.agenda = Z;
    inst.threshold = {1, 2};
    inst.comparison = Comparison::Strict;
    inst.budget = b * n;
    inst.prob.assign(m, std::vector<std::int64_t>(n));
    inst.cost.assign(m, std::vector<CostRow>(n));
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            const int e = E[i][j];
            inst.prob[i][j] = e;
            CostRow row(2, std::nullopt);
            row[e] = 0;
            if (e != Z[j]) row[Z[j]] = 1;  // unit flip toward the agenda
            inst.cost[i][j] = std::move(row);
        }
    }
    return validate_instance(std::move(inst));
}

}  // namespace lobby
