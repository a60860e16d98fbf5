#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kinosipp/grid_map.hpp"
#include "kinosipp/intervals.hpp"
#include "kinosipp/kinodynamics.hpp"

namespace kinosipp {

enum class GoalMode {
    AtRestAnyHeading,    // goal cell, velocity 0, any heading
    ExactConfiguration,  // goal_config matched exactly
};

// A planning problem plus the safe-interval tables derived from it.
// Call finalize() after filling the definition fields; planners expect a
// finalized instance and treat it as read-only.
struct ProblemInstance {
    // Definition.
    GridMap map;
    std::shared_ptr<const PrimitiveSet> primitives;
    Configuration start;
    Step start_time = 0;
    CellCoord goal;
    GoalMode goal_mode = GoalMode::AtRestAnyHeading;
    Configuration goal_config;
    std::vector<OccupancyEvent> events;
    double time_step = 0.1;
    std::uint64_t seed = 0;
    std::string map_path;
    std::optional<Step> horizon_override;

    // Derived by finalize().
    BlockedTable blocked;
    SafeTable safe;
    Step horizon = 0;

    // Validates the definition (throws InputError) and builds the derived
    // tables. Default horizon: last blocked step + (configurations + 1) *
    // longest primitive + 1, past which the world is static.
    void finalize();

    bool is_goal(const Configuration& c) const noexcept;
};

}  // namespace kinosipp
