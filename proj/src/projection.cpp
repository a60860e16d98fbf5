#include "kinosipp/projection.hpp"

#include <algorithm>
#include <stdexcept>

namespace kinosipp {

ProjectionResult project_intervals(const TimeInterval& departure, std::span<const SweepLeg> legs,
                                   Step duration, ProjectionTrace* trace) {
    if (legs.empty()) {
        return {};
    }
    IntervalList current{departure};
    IntervalList next;
    Step previous_lb = 0;
    for (const SweepLeg& leg : legs) {
        next.clear();
        const Step delta = leg.lb - previous_lb;
        previous_lb = leg.lb;
        const Step sweep = leg.ub - leg.lb;
        for (const TimeInterval& ti : current) {
            const Step lo = ti.lower + delta;
            const Step hi = shift(ti.upper, delta);
            for (const TimeInterval& si : *leg.safe) {
                if (si.lower > hi) {
                    break;
                }
                const Step earliest = std::max(lo, si.lower);
                const Step latest = std::min(hi, shift(si.upper, -sweep));
                if (earliest <= latest) {
                    next.push_back({earliest, latest});
                }
            }
        }
        current = canonicalize(std::move(next));
        next = IntervalList();
        if (trace) {
            trace->stages.push_back(current);
        }
        if (current.empty()) {
            return {};
        }
    }
    const Step tail = duration - legs.back().lb;
    for (TimeInterval& ti : current) {
        ti.lower += tail;
        ti.upper = shift(ti.upper, tail);
    }
    return current;
}

namespace {

// True iff the cell is blocked at some step of [from, to].
bool touches_blocked(const SafeIntervalSet& safe, Step from, Step to) {
    for (Step t = from; t <= to; ++t) {
        if (!safe.is_safe(t)) {
            return true;
        }
    }
    return false;
}

}  // namespace

ProjectionResult project_naive(const TimeInterval& departure, std::span<const SweepLeg> legs,
                               Step duration) {
    if (is_infinite(departure.upper)) {
        throw std::invalid_argument("project_naive needs a finite departure interval");
    }
    ProjectionResult out;
    if (legs.empty()) {
        return out;
    }
    for (Step t = departure.lower; t <= departure.upper; ++t) {
        bool free = true;
        for (const SweepLeg& leg : legs) {
            if (touches_blocked(*leg.safe, t + leg.lb, t + leg.ub)) {
                free = false;
                break;
            }
        }
        if (!free) {
            continue;
        }
        const Step arrival = t + duration;
        if (!out.empty() && out.back().upper + 1 == arrival) {
            out.back().upper = arrival;
        } else {
            out.push_back({arrival, arrival});
        }
    }
    return out;
}

ProjectionResult extend_wait(ProjectionResult intervals, bool target_allows_wait,
                             const SafeIntervalSet& target_safe) {
    if (!target_allows_wait) {
        return intervals;
    }
    for (TimeInterval& ti : intervals) {
        if (auto si = target_safe.containing(ti.lower)) {
            ti.upper = std::max(ti.upper, si->upper);
        }
    }
    return canonicalize(std::move(intervals));
}

}  // namespace kinosipp
