#pragma once

#include <span>
#include <vector>

#include "kinosipp/intervals.hpp"

namespace kinosipp {

// One swept cell of a primitive as seen by the projection: the relative
// first/last touch steps and the safe intervals of the absolute cell.
struct SweepLeg {
    Step lb = 0;
    Step ub = 0;
    const SafeIntervalSet* safe = nullptr;
};

// Arrival-time intervals at the end configuration of a primitive.
using ProjectionResult = IntervalList;

// Intermediate first-touch intervals after each cell, for inspection.
struct ProjectionTrace {
    std::vector<IntervalList> stages;
};

// Sequential cell-to-cell projection of a departure interval through the
// legs of a primitive. Works on interval endpoints only; handles open-ended
// intervals. Each stage is canonicalized, so the output is sorted, disjoint
// and maximal.
ProjectionResult project_intervals(const TimeInterval& departure, std::span<const SweepLeg> legs,
                                   Step duration, ProjectionTrace* trace = nullptr);

// Brute-force reference: tries every departure step. `departure.upper` must be
// finite.
ProjectionResult project_naive(const TimeInterval& departure, std::span<const SweepLeg> legs,
                               Step duration);

// Raises each interval's upper bound to that of its containing target safe
// interval when waiting is allowed there, then merges.
ProjectionResult extend_wait(ProjectionResult intervals, bool target_allows_wait,
                             const SafeIntervalSet& target_safe);

}  // namespace kinosipp
