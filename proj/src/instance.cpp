#include "kinosipp/instance.hpp"

#include <string>

namespace kinosipp {

namespace {

std::string cell_str(CellCoord c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

void ProblemInstance::finalize() {
    if (!primitives) {
        throw InputError("instance has no primitive set");
    }
    if (!(time_step > 0.0)) {
        throw InputError("time_step must be positive");
    }
    if (!map.is_traversable(start.cell())) {
        throw InputError("start cell " + cell_str(start.cell()) + " is not traversable");
    }
    if (!primitives->valid_velocity(start.velocity)) {
        throw InputError("start velocity index out of range");
    }
    if (!map.is_traversable(goal)) {
        throw InputError("goal cell " + cell_str(goal) + " is not traversable");
    }
    if (start_time < 0) {
        throw InputError("start_time must be non-negative");
    }
    for (const OccupancyEvent& ev : events) {
        if (!map.in_bounds(ev.cell)) {
            throw InputError("occupancy event references out-of-bounds cell " + cell_str(ev.cell));
        }
    }
    blocked = blocked_from_events(events, time_step);
    safe = SafeTable(map, blocked);

    if (horizon_override) {
        horizon = *horizon_override;
    } else {
        const Step configs = static_cast<Step>(map.traversable_count()) * 4 *
                             static_cast<Step>(primitives->velocities().size());
        horizon = std::max<Step>(safe.last_blocked_step(), start_time) +
                  (configs + 1) * primitives->max_duration() + 1;
    }
}

bool ProblemInstance::is_goal(const Configuration& c) const noexcept {
    if (goal_mode == GoalMode::ExactConfiguration) {
        return c == goal_config;
    }
    return c.row == goal.row && c.col == goal.col && primitives->allows_wait(c.velocity);
}

}  // namespace kinosipp
