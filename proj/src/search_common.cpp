#include "search_common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace kinosipp {

Step heuristic(const Configuration& config, CellCoord goal, double steps_per_cell) {
    const long double distance =
        std::abs(config.row - goal.row) + std::abs(config.col - goal.col);
    const long double steps = distance * steps_per_cell;
    const long double r = std::round(steps);
    return static_cast<Step>(std::abs(steps - r) < 1e-9L ? r : std::floor(steps));
}

Step heuristic(const Configuration& config, CellCoord goal, const PrimitiveParams& params) {
    return heuristic(config, goal, params.steps_per_cell());
}

bool dominates(const TimeInterval& existing, const TimeInterval& candidate) noexcept {
    return existing.contains(candidate) && existing.lower <= candidate.lower;
}

bool dominates(const SearchNode& existing, const SearchNode& candidate) noexcept {
    return existing.config == candidate.config && dominates(existing.interval, candidate.interval);
}

Trajectory reconstruct_path(std::span<const SearchNode> nodes, int goal, Step t_start,
                            const PrimitiveSet& primitives) {
    auto valid = [&](int i) { return i >= 0 && static_cast<std::size_t>(i) < nodes.size(); };
    if (!valid(goal)) {
        throw std::logic_error("reconstruct_path: goal node out of range");
    }
    Trajectory traj;
    Step t = nodes[static_cast<std::size_t>(goal)].interval.lower;
    traj.cost = t;
    int n = goal;
    std::size_t guard = 0;
    while (nodes[static_cast<std::size_t>(n)].parent >= 0) {
        const SearchNode& node = nodes[static_cast<std::size_t>(n)];
        if (!valid(node.parent) || node.primitive < 0 ||
            static_cast<std::size_t>(node.primitive) >= primitives.size() ||
            ++guard > nodes.size()) {
            throw std::logic_error("reconstruct_path: broken parent chain");
        }
        const Step w = primitives.at(node.primitive).duration;
        // At a wait-capable node the earliest arrival is used and any later
        // departure is covered by waiting there.
        const Step depart =
            primitives.allows_wait(node.config.velocity) ? node.interval.lower - w : t - w;
        traj.steps.push_back({node.primitive, depart});
        t = depart;
        n = node.parent;
    }
    std::reverse(traj.steps.begin(), traj.steps.end());
    const SearchNode& root = nodes[static_cast<std::size_t>(n)];
    if (t < t_start || !root.interval.contains(t)) {
        throw std::logic_error("reconstruct_path: chain does not start at the root interval");
    }
    traj.start_config = root.config;
    traj.start_time = t_start;
    if (traj.steps.empty()) {
        traj.cost = t_start;
    }
    return traj;
}

namespace detail {

void legs_for(const Footprint& fp, const SafeTable& safe, std::vector<SweepLeg>& out) {
    out.clear();
    for (const FootprintCell& c : fp.cells) {
        out.push_back({c.lb, c.ub, &safe.at(c.cell)});
    }
}

bool start_is_safe(const ProblemInstance& instance) {
    return instance.safe.at(instance.start.cell()).is_safe(instance.start_time);
}

}  // namespace detail

}  // namespace kinosipp
