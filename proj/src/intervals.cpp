#include "kinosipp/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kinosipp {

IntervalList canonicalize(IntervalList intervals) {
    std::sort(intervals.begin(), intervals.end());
    IntervalList out;
    out.reserve(intervals.size());
    for (const TimeInterval& iv : intervals) {
        if (!out.empty() && !is_infinite(out.back().upper) && iv.lower <= out.back().upper + 1) {
            out.back().upper = std::max(out.back().upper, iv.upper);
        } else if (!out.empty() && is_infinite(out.back().upper)) {
            continue;
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

IntervalList complement(const IntervalList& intervals) {
    IntervalList out;
    Step next = 0;
    for (const TimeInterval& iv : intervals) {
        if (iv.lower > next) {
            out.push_back({next, iv.lower - 1});
        }
        if (is_infinite(iv.upper)) {
            return out;
        }
        next = iv.upper + 1;
    }
    out.push_back({next, kInfinity});
    return out;
}

SafeIntervalSet::SafeIntervalSet(IntervalList intervals) : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (intervals_[i].lower < 0 || intervals_[i].lower > intervals_[i].upper) {
            throw std::invalid_argument("SafeIntervalSet: malformed interval");
        }
        if (i > 0 && (is_infinite(intervals_[i - 1].upper) ||
                      intervals_[i].lower <= intervals_[i - 1].upper + 1)) {
            throw std::invalid_argument("SafeIntervalSet: intervals must be sorted and separated");
        }
    }
}

std::optional<std::size_t> SafeIntervalSet::index_of(Step t) const noexcept {
    // First interval whose upper bound reaches t.
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), t,
                               [](const TimeInterval& iv, Step v) { return iv.upper < v; });
    if (it == intervals_.end() || it->lower > t) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - intervals_.begin());
}

std::optional<TimeInterval> SafeIntervalSet::containing(Step t) const noexcept {
    if (auto i = index_of(t)) {
        return intervals_[*i];
    }
    return std::nullopt;
}

bool SafeIntervalSet::is_safe_during(Step from, Step to) const noexcept {
    auto i = index_of(from);
    return i && intervals_[*i].upper >= to;
}

namespace {

double steps_quotient(double seconds, double time_step) {
    const double q = seconds / time_step;
    const double r = std::round(q);
    return std::abs(q - r) < 1e-9 ? r : q;
}

}  // namespace

Step floor_steps(double seconds, double time_step) {
    return static_cast<Step>(std::floor(steps_quotient(seconds, time_step)));
}

Step ceil_steps(double seconds, double time_step) {
    return static_cast<Step>(std::ceil(steps_quotient(seconds, time_step)));
}

BlockedTable blocked_from_events(std::span<const OccupancyEvent> events, double time_step) {
    if (!(time_step > 0.0)) {
        throw InputError("time step must be positive");
    }
    BlockedTable table;
    for (const OccupancyEvent& ev : events) {
        if (ev.enter_s < 0.0 || ev.leave_s < 0.0 || !std::isfinite(ev.enter_s) ||
            std::isnan(ev.leave_s)) {
            throw InputError("occupancy event with negative time at cell (" +
                             std::to_string(ev.cell.row) + "," + std::to_string(ev.cell.col) +
                             ")");
        }
        if (ev.enter_s > ev.leave_s) {
            throw InputError("occupancy event leaves before it enters at cell (" +
                             std::to_string(ev.cell.row) + "," + std::to_string(ev.cell.col) +
                             ")");
        }
        table[ev.cell].push_back(
            {floor_steps(ev.enter_s, time_step),
             std::isinf(ev.leave_s) ? kInfinity : ceil_steps(ev.leave_s, time_step)});
    }
    for (auto& [cell, list] : table) {
        list = canonicalize(std::move(list));
    }
    return table;
}

SafeIntervalSet invert_to_safe(const IntervalList& blocked, bool cell_static) {
    if (cell_static) {
        return SafeIntervalSet();
    }
    return SafeIntervalSet(complement(blocked));
}

std::optional<TimeInterval> safe_interval_containing(const SafeIntervalSet& set, Step t) {
    return set.containing(t);
}

SafeTable::SafeTable(const GridMap& map, const BlockedTable& blocked)
    : width_(map.width()), height_(map.height()), cells_(map.cell_count()) {
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) {
            const bool blocked_static = !map.is_traversable(r, c);
            auto it = blocked.find({r, c});
            if (it == blocked.end()) {
                cells_[map.index(r, c)] =
                    blocked_static ? SafeIntervalSet() : SafeIntervalSet::always_safe();
                continue;
            }
            cells_[map.index(r, c)] = invert_to_safe(it->second, blocked_static);
            if (!blocked_static && !it->second.empty()) {
                // A parked obstacle freezes the cell from its arrival on.
                const TimeInterval& last = it->second.back();
                last_blocked_ = std::max(last_blocked_, last.unbounded() ? last.lower : last.upper);
            }
        }
    }
}

}  // namespace kinosipp
