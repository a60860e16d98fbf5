#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kinosipp/instance.hpp"

namespace kinosipp {

enum class PlannerKind { AStarTS, SippClassic, Sipp1, Sipp2, SippIP };

inline constexpr PlannerKind kAllPlanners[] = {PlannerKind::AStarTS, PlannerKind::SippClassic,
                                               PlannerKind::Sipp1, PlannerKind::Sipp2,
                                               PlannerKind::SippIP};

// CLI names: astar, sipp, sipp1, sipp2, sipp-ip.
std::string_view planner_name(PlannerKind kind) noexcept;
std::optional<PlannerKind> parse_planner(std::string_view name) noexcept;

struct SearchLimits {
    std::uint64_t max_generated = 100'000'000;
    bool record_trace = false;
    // SIPP-IP only: skip a successor only if an identical (configuration,
    // interval) node was already generated, instead of dominance pruning with
    // replacement of dominated OPEN nodes.
    bool identical_only_open = false;
};

enum class PlanStatus { Solved, NoSolution, ResourceLimit };

std::string_view status_name(PlanStatus s) noexcept;

struct TrajectoryStep {
    int primitive = 0;
    Step start = 0;

    bool operator==(const TrajectoryStep&) const = default;
};

// Timed plan. Waits are implied by gaps between one step's arrival and the
// next step's start, and by a first start later than start_time.
struct Trajectory {
    Configuration start_config;
    Step start_time = 0;
    std::vector<TrajectoryStep> steps;
    Step cost = 0;

    bool operator==(const Trajectory&) const = default;
};

struct TraceEntry {
    Configuration config;
    TimeInterval interval;
    Step f = 0;
};

struct PlanOutcome {
    PlanStatus status = PlanStatus::NoSolution;
    std::optional<Trajectory> trajectory;
    std::uint64_t expansions = 0;
    std::uint64_t generations = 0;
    double runtime_s = 0.0;
    std::vector<TraceEntry> trace;  // popped nodes, when requested
};

// floor(Manhattan distance * steps_per_cell).
Step heuristic(const Configuration& config, CellCoord goal, double steps_per_cell);
Step heuristic(const Configuration& config, CellCoord goal, const PrimitiveParams& params);

// Search node of the interval-projection planner: a configuration with its
// waiting interval. g = interval.lower.
struct SearchNode {
    Configuration config;
    TimeInterval interval;
    Step g = 0;
    Step f = 0;
    int parent = -1;
    int primitive = -1;
};

// existing covers every atomic (configuration, time) state of candidate.
bool dominates(const TimeInterval& existing, const TimeInterval& candidate) noexcept;
bool dominates(const SearchNode& existing, const SearchNode& candidate) noexcept;

// Walks the parent chain from nodes[goal] back to its root. Throws
// std::logic_error when the chain is broken.
Trajectory reconstruct_path(std::span<const SearchNode> nodes, int goal, Step t_start,
                            const PrimitiveSet& primitives);

PlanOutcome sipp_ip_find_path(const ProblemInstance& instance, const SearchLimits& limits = {});
PlanOutcome astar_ts_find_path(const ProblemInstance& instance, const SearchLimits& limits = {});
PlanOutcome sipp_classic_find_path(const ProblemInstance& instance,
                                   const SearchLimits& limits = {});
PlanOutcome sipp1_find_path(const ProblemInstance& instance, const SearchLimits& limits = {});
PlanOutcome sipp2_find_path(const ProblemInstance& instance, const SearchLimits& limits = {});

PlanOutcome find_path(PlannerKind kind, const ProblemInstance& instance,
                      const SearchLimits& limits = {});

}  // namespace kinosipp
