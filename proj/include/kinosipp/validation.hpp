#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kinosipp/instance.hpp"
#include "kinosipp/planners.hpp"

namespace kinosipp {

enum class ViolationKind { ChainBreak, IllegalWait, StaticCollision, DynamicCollision, BadCost };

std::string_view violation_name(ViolationKind k) noexcept;

struct Violation {
    ViolationKind kind;
    Step time = 0;
    std::optional<CellCoord> cell;
    std::string detail;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;

    bool has(ViolationKind k) const noexcept;
};

// Replays `trajectory` against the instance's map and occupancy events.
// Sweep intervals are closed on both ends. Never throws on bad trajectories;
// everything found is reported.
ValidationReport validate(const Trajectory& trajectory, const ProblemInstance& instance);

}  // namespace kinosipp
