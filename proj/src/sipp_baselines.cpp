#include <algorithm>
#include <unordered_map>

#include "search_common.hpp"

namespace kinosipp {

namespace {

// Baselines keyed by (configuration, safe interval) with an earliest-arrival
// g-value. Departure delays are taken only where the agent may wait.
//   Classic: checks moving obstacles at the departure and arrival instants
//            only, not while the primitive sweeps its cells.
//   Sipp1:   full swept-cell checks; one node per (configuration, interval).
//   Sipp2:   Sipp1, but a moving configuration reached at a different time in
//            the same safe interval is a new node and is expanded again.
enum class Variant { Classic, Sipp1, Sipp2 };

enum class NodeState : std::uint8_t { Open, Closed, Removed };

struct IntervalNode {
    Configuration config;
    std::size_t safe_index = 0;
    Step g = 0;
    std::int32_t parent = -1;
    std::int32_t primitive = -1;
    Step depart = 0;
};

struct NodeKey {
    std::size_t config = 0;
    std::size_t safe_index = 0;
    Step arrival = -1;  // -1 unless arrival time is part of the identity

    bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const noexcept {
        std::size_t h = k.config * 0x9E3779B97F4A7C15ULL;
        h ^= k.safe_index + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(k.arrival) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class SafeIntervalSearch {
public:
    SafeIntervalSearch(const ProblemInstance& instance, const SearchLimits& limits, Variant variant)
        : inst_(instance),
          prims_(*instance.primitives),
          limits_(limits),
          variant_(variant),
          index_(instance.map, prims_),
          h_(instance) {}

    PlanOutcome run() {
        detail::Stopwatch clock;
        PlanOutcome out;
        out.status = search(out);
        out.expansions = expansions_;
        out.generations = generations_;
        out.runtime_s = clock.seconds();
        return out;
    }

private:
    PlanStatus search(PlanOutcome& out) {
        if (!detail::start_is_safe(inst_)) {
            return PlanStatus::NoSolution;
        }
        const SafeIntervalSet& start_safe = inst_.safe.at(inst_.start.cell());
        offer(inst_.start, *start_safe.index_of(inst_.start_time), inst_.start_time, -1, -1);

        std::vector<SweepLeg> legs;
        while (!open_.empty()) {
            const detail::OpenEntry top = open_.top();
            open_.pop();
            if (state_[top.node] != NodeState::Open) {
                continue;
            }
            state_[top.node] = NodeState::Closed;
            const IntervalNode current = nodes_[top.node];
            ++expansions_;
            const SafeIntervalSet& here = inst_.safe.at(current.config.cell());
            if (limits_.record_trace) {
                out.trace.push_back(
                    {current.config, {current.g, here[current.safe_index].upper}, top.f});
            }
            if (inst_.is_goal(current.config)) {
                out.trajectory = reconstruct(static_cast<std::int32_t>(top.node));
                return PlanStatus::Solved;
            }
            const TimeInterval window{current.g, prims_.allows_wait(current.config.velocity)
                                                     ? here[current.safe_index].upper
                                                     : current.g};
            for (const MotionPrimitive* prim : applicable_primitives(current.config, prims_)) {
                auto fp = primitive_footprint(current.config, *prim, prims_, inst_.map);
                if (!fp) {
                    continue;
                }
                build_legs(current.config.cell(), *fp, legs);
                const ProjectionResult arrivals = project_intervals(window, legs, fp->duration);
                const SafeIntervalSet& target = inst_.safe.at(fp->target.cell());
                // Earliest arrival per target safe interval (arrivals are sorted).
                std::size_t last_index = static_cast<std::size_t>(-1);
                for (const TimeInterval& a : arrivals) {
                    if (a.lower > inst_.horizon) {
                        break;
                    }
                    const std::size_t si = *target.index_of(a.lower);
                    if (si == last_index) {
                        continue;
                    }
                    last_index = si;
                    offer(fp->target, si, a.lower, static_cast<std::int32_t>(top.node), prim->id);
                    if (generations_ > limits_.max_generated) {
                        return PlanStatus::ResourceLimit;
                    }
                }
            }
        }
        return PlanStatus::NoSolution;
    }

    void build_legs(CellCoord source, const Footprint& fp, std::vector<SweepLeg>& legs) const {
        if (variant_ != Variant::Classic) {
            detail::legs_for(fp, inst_.safe, legs);
            return;
        }
        // Instantaneous checks at the source (departure) and target (arrival).
        legs.clear();
        legs.push_back({0, 0, &inst_.safe.at(source)});
        legs.push_back({fp.duration, fp.duration, &inst_.safe.at(fp.target.cell())});
    }

    void offer(const Configuration& config, std::size_t safe_index, Step arrival,
               std::int32_t parent, std::int32_t primitive) {
        NodeKey key{index_(config), safe_index, -1};
        if (variant_ == Variant::Sipp2 && !prims_.allows_wait(config.velocity)) {
            key.arrival = arrival;
        }
        auto it = best_.find(key);
        if (it != best_.end()) {
            const std::uint32_t existing = it->second;
            if (state_[existing] == NodeState::Closed || nodes_[existing].g <= arrival) {
                return;
            }
            state_[existing] = NodeState::Removed;
        }
        const auto id = static_cast<std::uint32_t>(nodes_.size());
        const Step depart = primitive >= 0 ? arrival - prims_.at(primitive).duration : arrival;
        nodes_.push_back({config, safe_index, arrival, parent, primitive, depart});
        state_.push_back(NodeState::Open);
        best_[key] = id;
        const Step h = h_(config);
        open_.push({arrival + h, h, config, arrival, id});
        ++generations_;
    }

    Trajectory reconstruct(std::int32_t goal) const {
        Trajectory traj;
        traj.start_time = inst_.start_time;
        traj.cost = nodes_[static_cast<std::size_t>(goal)].g;
        std::int32_t n = goal;
        while (nodes_[static_cast<std::size_t>(n)].parent >= 0) {
            const IntervalNode& node = nodes_[static_cast<std::size_t>(n)];
            traj.steps.push_back({node.primitive, node.depart});
            n = node.parent;
        }
        std::reverse(traj.steps.begin(), traj.steps.end());
        traj.start_config = nodes_[static_cast<std::size_t>(n)].config;
        return traj;
    }

    const ProblemInstance& inst_;
    const PrimitiveSet& prims_;
    SearchLimits limits_;
    Variant variant_;
    detail::ConfigIndexer index_;
    detail::GoalHeuristic h_;
    std::vector<IntervalNode> nodes_;
    std::vector<NodeState> state_;
    std::unordered_map<NodeKey, std::uint32_t, NodeKeyHash> best_;
    detail::OpenQueue open_;
    std::uint64_t expansions_ = 0;
    std::uint64_t generations_ = 0;
};

}  // namespace

PlanOutcome sipp_classic_find_path(const ProblemInstance& instance, const SearchLimits& limits) {
    return SafeIntervalSearch(instance, limits, Variant::Classic).run();
}

PlanOutcome sipp1_find_path(const ProblemInstance& instance, const SearchLimits& limits) {
    return SafeIntervalSearch(instance, limits, Variant::Sipp1).run();
}

PlanOutcome sipp2_find_path(const ProblemInstance& instance, const SearchLimits& limits) {
    return SafeIntervalSearch(instance, limits, Variant::Sipp2).run();
}

}  // namespace kinosipp
