#include "kinosipp/planners.hpp"

#include <stdexcept>

namespace kinosipp {

std::string_view planner_name(PlannerKind kind) noexcept {
    switch (kind) {
        case PlannerKind::AStarTS: return "astar";
        case PlannerKind::SippClassic: return "sipp";
        case PlannerKind::Sipp1: return "sipp1";
        case PlannerKind::Sipp2: return "sipp2";
        case PlannerKind::SippIP: return "sipp-ip";
    }
    return "?";
}

std::optional<PlannerKind> parse_planner(std::string_view name) noexcept {
    for (PlannerKind k : kAllPlanners) {
        if (planner_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view status_name(PlanStatus s) noexcept {
    switch (s) {
        case PlanStatus::Solved: return "solved";
        case PlanStatus::NoSolution: return "no_solution";
        case PlanStatus::ResourceLimit: return "resource_limit";
    }
    return "?";
}

PlanOutcome find_path(PlannerKind kind, const ProblemInstance& instance,
                      const SearchLimits& limits) {
    switch (kind) {
        case PlannerKind::AStarTS: return astar_ts_find_path(instance, limits);
        case PlannerKind::SippClassic: return sipp_classic_find_path(instance, limits);
        case PlannerKind::Sipp1: return sipp1_find_path(instance, limits);
        case PlannerKind::Sipp2: return sipp2_find_path(instance, limits);
        case PlannerKind::SippIP: return sipp_ip_find_path(instance, limits);
    }
    throw std::invalid_argument("unknown planner");
}

}  // namespace kinosipp
