#include <algorithm>
#include <unordered_set>

#include "search_common.hpp"

namespace kinosipp {

namespace {

struct TimedNode {
    Configuration config;
    Step t = 0;
    std::int32_t parent = -1;
    std::int32_t primitive = -1;  // -1: one-step wait
};

bool sweep_is_free(const Footprint& fp, Step depart, const SafeTable& safe) {
    for (const FootprintCell& c : fp.cells) {
        if (!safe.at(c.cell).is_safe_during(depart + c.lb, depart + c.ub)) {
            return false;
        }
    }
    return true;
}

}  // namespace

PlanOutcome astar_ts_find_path(const ProblemInstance& instance, const SearchLimits& limits) {
    detail::Stopwatch clock;
    PlanOutcome out;
    const PrimitiveSet& prims = *instance.primitives;
    const detail::ConfigIndexer index(instance.map, prims);
    const detail::GoalHeuristic h(instance);
    const auto span = static_cast<std::uint64_t>(instance.horizon) + 1;

    std::vector<TimedNode> nodes;
    std::unordered_set<std::uint64_t> seen;
    detail::OpenQueue open;

    auto finish = [&](PlanStatus s) {
        out.status = s;
        out.runtime_s = clock.seconds();
        return out;
    };
    auto add = [&](const Configuration& c, Step t, std::int32_t parent, std::int32_t prim) {
        const std::uint64_t key =
            static_cast<std::uint64_t>(index(c)) * span + static_cast<std::uint64_t>(t);
        if (!seen.insert(key).second) {
            return;
        }
        const auto id = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back({c, t, parent, prim});
        const Step hv = h(c);
        open.push({t + hv, hv, c, t, id});
        ++out.generations;
    };

    if (!detail::start_is_safe(instance) || instance.start_time > instance.horizon) {
        return finish(PlanStatus::NoSolution);
    }
    add(instance.start, instance.start_time, -1, -1);

    while (!open.empty()) {
        const detail::OpenEntry top = open.top();
        open.pop();
        const TimedNode current = nodes[top.node];
        ++out.expansions;
        if (limits.record_trace) {
            out.trace.push_back({current.config, {current.t, current.t}, top.f});
        }
        if (instance.is_goal(current.config)) {
            Trajectory traj;
            traj.start_time = instance.start_time;
            traj.cost = current.t;
            std::int32_t n = static_cast<std::int32_t>(top.node);
            while (nodes[static_cast<std::size_t>(n)].parent >= 0) {
                const TimedNode& node = nodes[static_cast<std::size_t>(n)];
                if (node.primitive >= 0) {
                    traj.steps.push_back({node.primitive, node.t - prims.at(node.primitive).duration});
                }
                n = node.parent;
            }
            std::reverse(traj.steps.begin(), traj.steps.end());
            traj.start_config = nodes[static_cast<std::size_t>(n)].config;
            out.trajectory = std::move(traj);
            return finish(PlanStatus::Solved);
        }
        for (const MotionPrimitive* prim : applicable_primitives(current.config, prims)) {
            const Step arrival = current.t + prim->duration;
            if (arrival > instance.horizon) {
                continue;
            }
            auto fp = primitive_footprint(current.config, *prim, prims, instance.map);
            if (!fp || !sweep_is_free(*fp, current.t, instance.safe)) {
                continue;
            }
            add(fp->target, arrival, static_cast<std::int32_t>(top.node), prim->id);
        }
        if (prims.allows_wait(current.config.velocity) && current.t + 1 <= instance.horizon &&
            instance.safe.at(current.config.cell()).is_safe(current.t + 1)) {
            add(current.config, current.t + 1, static_cast<std::int32_t>(top.node), -1);
        }
        if (out.generations > limits.max_generated) {
            return finish(PlanStatus::ResourceLimit);
        }
    }
    return finish(PlanStatus::NoSolution);
}

}  // namespace kinosipp
