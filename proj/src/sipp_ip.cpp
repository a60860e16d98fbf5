#include <algorithm>

#include "search_common.hpp"

namespace kinosipp {

namespace {

enum class NodeState : std::uint8_t { Open, Closed, Removed };

class IntervalProjectionSearch {
public:
    IntervalProjectionSearch(const ProblemInstance& instance, const SearchLimits& limits)
        : inst_(instance),
          prims_(*instance.primitives),
          limits_(limits),
          index_(instance.map, prims_),
          h_(instance),
          buckets_(index_.size()) {}

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
        TimeInterval start{inst_.start_time, inst_.start_time};
        if (prims_.allows_wait(inst_.start.velocity)) {
            start.upper = inst_.safe.at(inst_.start.cell()).containing(inst_.start_time)->upper;
        }
        add_node(inst_.start, start, -1, -1);

        std::vector<SweepLeg> legs;
        while (!open_.empty()) {
            const detail::OpenEntry top = open_.top();
            open_.pop();
            if (state_[top.node] != NodeState::Open) {
                continue;
            }
            state_[top.node] = NodeState::Closed;
            const SearchNode current = nodes_[top.node];
            ++expansions_;
            if (limits_.record_trace) {
                out.trace.push_back({current.config, current.interval, current.f});
            }
            if (inst_.is_goal(current.config)) {
                out.trajectory =
                    reconstruct_path(nodes_, static_cast<int>(top.node), inst_.start_time, prims_);
                return PlanStatus::Solved;
            }
            for (const MotionPrimitive* prim : applicable_primitives(current.config, prims_)) {
                auto fp = primitive_footprint(current.config, *prim, prims_, inst_.map);
                if (!fp) {
                    continue;
                }
                detail::legs_for(*fp, inst_.safe, legs);
                ProjectionResult arrivals = project_intervals(current.interval, legs, fp->duration);
                arrivals = extend_wait(std::move(arrivals), prims_.allows_wait(fp->target.velocity),
                                       inst_.safe.at(fp->target.cell()));
                for (const TimeInterval& ti : arrivals) {
                    if (ti.lower > inst_.horizon) {
                        break;
                    }
                    insert_candidate(fp->target, ti, static_cast<int>(top.node), prim->id);
                    if (generations_ > limits_.max_generated) {
                        return PlanStatus::ResourceLimit;
                    }
                }
            }
        }
        return PlanStatus::NoSolution;
    }

    void insert_candidate(const Configuration& config, const TimeInterval& ti, int parent,
                          int primitive) {
        std::vector<std::uint32_t>& bucket = buckets_[index_(config)];
        if (limits_.identical_only_open) {
            for (std::uint32_t id : bucket) {
                if (nodes_[id].interval == ti) {
                    return;
                }
            }
        } else {
            for (std::uint32_t id : bucket) {
                if (state_[id] != NodeState::Removed && dominates(nodes_[id].interval, ti)) {
                    return;
                }
            }
            // Dominated OPEN nodes are superseded; their states are all covered.
            std::erase_if(bucket, [&](std::uint32_t id) {
                if (state_[id] == NodeState::Open && dominates(ti, nodes_[id].interval)) {
                    state_[id] = NodeState::Removed;
                    return true;
                }
                return state_[id] == NodeState::Removed;
            });
        }
        add_node(config, ti, parent, primitive);
    }

    void add_node(const Configuration& config, const TimeInterval& ti, int parent, int primitive) {
        SearchNode n;
        n.config = config;
        n.interval = ti;
        n.g = ti.lower;
        const Step h = h_(config);
        n.f = n.g + h;
        n.parent = parent;
        n.primitive = primitive;
        const auto id = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back(n);
        state_.push_back(NodeState::Open);
        buckets_[index_(config)].push_back(id);
        open_.push({n.f, h, config, ti.lower, id});
        ++generations_;
    }

    const ProblemInstance& inst_;
    const PrimitiveSet& prims_;
    SearchLimits limits_;
    detail::ConfigIndexer index_;
    detail::GoalHeuristic h_;
    std::vector<SearchNode> nodes_;
    std::vector<NodeState> state_;
    std::vector<std::vector<std::uint32_t>> buckets_;
    detail::OpenQueue open_;
    std::uint64_t expansions_ = 0;
    std::uint64_t generations_ = 0;
};

}  // namespace

PlanOutcome sipp_ip_find_path(const ProblemInstance& instance, const SearchLimits& limits) {
    return IntervalProjectionSearch(instance, limits).run();
}

}  // namespace kinosipp
