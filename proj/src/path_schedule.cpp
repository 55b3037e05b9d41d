#include "lobby/path_schedule.hpp"

#include <limits>
#include <numeric>

#include "lobby/errors.hpp"
#include "lobby/rational.hpp"

namespace lobby {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t total_jobs(const ScheduleInstance& si) {
    std::int64_t t = 0;
    for (const auto& p : si.paths) t += static_cast<std::int64_t>(p.size());
    return t;
}

}  // namespace

std::optional<ScheduleResult> min_cost_schedule_with_counts(const ScheduleInstance& si) {
    if (si.q < 0 || si.q > total_jobs(si)) return std::nullopt;
    const std::int64_t q = si.q;
    const std::int64_t z = static_cast<std::int64_t>(si.paths.size());

    // row[j] = min cost of scheduling j jobs from the paths seen so far.
    std::vector<std::int64_t> row(q + 1, kInf);
    row[0] = 0;
    // choice[l][j] = jobs taken from path l in an optimal schedule of j jobs
    // over paths 0..l.
    std::vector<std::vector<std::int64_t>> choice(z, std::vector<std::int64_t>(q + 1, -1));

    for (std::int64_t l = 0; l < z; ++l) {
        const auto& path = si.paths[l];
        std::vector<std::int64_t> next(q + 1, kInf);
        for (std::int64_t j = 0; j <= q; ++j) {
            std::int64_t prefix_cost = 0;
            for (std::int64_t x = 0; x <= std::min<std::int64_t>(j, path.size()); ++x) {
                if (x > 0) prefix_cost = checked_add(prefix_cost, path[x - 1]);
                if (row[j - x] == kInf) continue;
                std::int64_t cand = checked_add(row[j - x], prefix_cost);
                if (cand < next[j]) {
                    next[j] = cand;
                    choice[l][j] = x;
                }
            }
        }
        row = std::move(next);
    }
    if (row[q] == kInf) return std::nullopt;

    ScheduleResult res;
    res.cost = row[q];
    res.prefix_len.assign(z, 0);
    std::int64_t j = q;
    for (std::int64_t l = z - 1; l >= 0; --l) {
        res.prefix_len[l] = choice[l][j];
        j -= choice[l][j];
    }
    return res;
}

std::optional<std::int64_t> min_cost_schedule(const ScheduleInstance& si) {
    auto res = min_cost_schedule_with_counts(si);
    if (!res) return std::nullopt;
    return res->cost;
}

std::optional<std::int64_t> schedule_oracle(const ScheduleInstance& si) {
    if (total_jobs(si) > 20) throw InstanceTooLarge("schedule oracle handles at most 20 jobs");
    if (si.q < 0 || si.q > total_jobs(si)) return std::nullopt;

    std::optional<std::int64_t> best;
    std::vector<std::int64_t> take(si.paths.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t left) -> void {
        if (idx == si.paths.size()) {
            if (left != 0) return;
            std::int64_t cost = 0;
            for (std::size_t l = 0; l < si.paths.size(); ++l)
                for (std::int64_t s = 0; s < take[l]; ++s)
                    cost = checked_add(cost, si.paths[l][s]);
            if (!best || cost < *best) best = cost;
            return;
        }
        const std::int64_t cap = std::min<std::int64_t>(left, si.paths[idx].size());
        for (std::int64_t x = 0; x <= cap; ++x) {
            take[idx] = x;
            self(self, idx + 1, left - x);
        }
    };
    rec(rec, 0, si.q);
    return best;
}

}  // namespace lobby
