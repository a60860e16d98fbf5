#include "kinosipp/validation.hpp"

#include <algorithm>
#include <string>

namespace kinosipp {

namespace {

// Offsets are stored for an east-facing agent; quarter turns CCW with rows
// growing downward map (dr, dc) -> (-dc, dr).
CellCoord place(const Configuration& at, int drow, int dcol) {
    for (int i = 0; i < static_cast<int>(at.heading); ++i) {
        const int r = -dcol;
        dcol = drow;
        drow = r;
    }
    return {at.row + drow, at.col + dcol};
}

class Replay {
public:
    Replay(const ProblemInstance& inst)
        : inst_(inst), blocked_(blocked_from_events(inst.events, inst.time_step)) {}

    void fail(ViolationKind k, Step t, std::optional<CellCoord> c, std::string why) {
        report_.valid = false;
        report_.violations.push_back({k, t, c, std::move(why)});
    }

    // First blocked step of `c` within [from, to], if any.
    std::optional<Step> first_blocked(CellCoord c, Step from, Step to) const {
        auto it = blocked_.find(c);
        if (it == blocked_.end()) {
            return std::nullopt;
        }
        for (const TimeInterval& b : it->second) {
            if (b.lower <= to && from <= b.upper) {
                return std::max(b.lower, from);
            }
        }
        return std::nullopt;
    }

    void occupy(CellCoord c, Step from, Step to, const char* what) {
        if (!inst_.map.is_traversable(c)) {
            fail(ViolationKind::StaticCollision, from, c, std::string(what) + " on a blocked cell");
            return;
        }
        if (auto t = first_blocked(c, from, to)) {
            fail(ViolationKind::DynamicCollision, *t, c,
                 std::string(what) + " overlaps a moving obstacle");
        }
    }

    ValidationReport run(const Trajectory& traj) {
        const PrimitiveSet& prims = *inst_.primitives;
        Configuration at = traj.start_config;
        Step clock = traj.start_time;
        if (at != inst_.start) {
            fail(ViolationKind::ChainBreak, clock, at.cell(), "start configuration mismatch");
        }
        if (clock != inst_.start_time) {
            fail(ViolationKind::ChainBreak, clock, at.cell(), "start time mismatch");
        }
        for (std::size_t i = 0; i < traj.steps.size(); ++i) {
            const TrajectoryStep& s = traj.steps[i];
            if (s.primitive < 0 || static_cast<std::size_t>(s.primitive) >= prims.size()) {
                fail(ViolationKind::ChainBreak, s.start, at.cell(),
                     "step " + std::to_string(i) + ": unknown primitive");
                return finish(traj, clock);
            }
            const MotionPrimitive& p = prims.at(s.primitive);
            if (p.source_velocity != at.velocity) {
                fail(ViolationKind::ChainBreak, s.start, at.cell(),
                     "step " + std::to_string(i) + ": source velocity mismatch");
            }
            if (p.rotation() && prims.velocities()[static_cast<std::size_t>(at.velocity)] != 0.0) {
                fail(ViolationKind::ChainBreak, s.start, at.cell(),
                     "step " + std::to_string(i) + ": rotation while moving");
            }
            if (s.start < clock) {
                fail(ViolationKind::ChainBreak, s.start, at.cell(),
                     "step " + std::to_string(i) + ": starts before previous arrival");
            } else if (s.start > clock) {
                if (prims.velocities()[static_cast<std::size_t>(at.velocity)] != 0.0) {
                    fail(ViolationKind::IllegalWait, clock, at.cell(), "wait at nonzero velocity");
                }
                occupy(at.cell(), clock, s.start, "wait");
            }
            for (const SweptCell& sc : p.swept_cells) {
                occupy(place(at, sc.offset.drow, sc.offset.dcol), s.start + sc.lb, s.start + sc.ub,
                       "sweep");
            }
            const CellCoord end = place(at, p.displacement.drow, p.displacement.dcol);
            at = {end.row, end.col, turn(at.heading, p.heading_delta), p.target_velocity};
            clock = s.start + p.duration;
        }
        return finish(traj, clock);
    }

private:
    ValidationReport finish(const Trajectory& traj, Step arrival) {
        if (traj.cost != arrival) {
            fail(ViolationKind::BadCost, arrival, std::nullopt,
                 "cost " + std::to_string(traj.cost) + " != arrival " + std::to_string(arrival));
        }
        return std::move(report_);
    }

    const ProblemInstance& inst_;
    BlockedTable blocked_;
    ValidationReport report_;
};

}  // namespace

std::string_view violation_name(ViolationKind k) noexcept {
    switch (k) {
        case ViolationKind::ChainBreak: return "chain_break";
        case ViolationKind::IllegalWait: return "illegal_wait";
        case ViolationKind::StaticCollision: return "static_collision";
        case ViolationKind::DynamicCollision: return "dynamic_collision";
        case ViolationKind::BadCost: return "bad_cost";
    }
    return "?";
}

bool ValidationReport::has(ViolationKind k) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const Violation& v) { return v.kind == k; });
}

ValidationReport validate(const Trajectory& trajectory, const ProblemInstance& instance) {
    return Replay(instance).run(trajectory);
}

}  // namespace kinosipp
