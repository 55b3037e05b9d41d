#ifndef LOBBY_PATH_SCHEDULE_HPP
#define LOBBY_PATH_SCHEDULE_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace lobby {

/// Jobs arranged in disjoint paths; a schedule may take only prefixes of
/// each path. q is the number of jobs to schedule.
struct ScheduleInstance {
    std::vector<std::vector<std::int64_t>> paths;  // job costs, path order
    std::int64_t q = 0;
};

struct ScheduleResult {
    std::int64_t cost = 0;
    std::vector<std::int64_t> prefix_len;  // jobs taken per path
};

/// Minimum cost of scheduling exactly q jobs respecting path prefixes,
/// or nullopt when q exceeds the total job count.
std::optional<std::int64_t> min_cost_schedule(const ScheduleInstance& si);

/// Same optimum plus one witness prefix assignment.
std::optional<ScheduleResult> min_cost_schedule_with_counts(const ScheduleInstance& si);

/// Exhaustive enumeration over all prefix-length tuples summing to q.
/// Independent correctness anchor for the DP; throws InstanceTooLarge
/// beyond 20 jobs.
std::optional<std::int64_t> schedule_oracle(const ScheduleInstance& si);

}  // namespace lobby

#endif
