#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kinosipp/grid_map.hpp"

namespace kinosipp {

// Discrete time, in time steps.
using Step = std::int64_t;

// Open-ended upper bound. Arithmetic through shift()/unshift() saturates on it;
// it is never produced by ordinary addition.
inline constexpr Step kInfinity = std::numeric_limits<Step>::max();

constexpr bool is_infinite(Step t) noexcept { return t == kInfinity; }

constexpr Step shift(Step t, Step delta) noexcept {
    return is_infinite(t) ? kInfinity : t + delta;
}

struct TimeInterval {
    Step lower = 0;
    Step upper = 0;

    constexpr bool contains(Step t) const noexcept { return lower <= t && t <= upper; }
    constexpr bool contains(const TimeInterval& o) const noexcept {
        return lower <= o.lower && o.upper <= upper;
    }
    constexpr bool overlaps(const TimeInterval& o) const noexcept {
        return lower <= o.upper && o.lower <= upper;
    }
    constexpr bool unbounded() const noexcept { return is_infinite(upper); }

    auto operator<=>(const TimeInterval&) const = default;
};

using IntervalList = std::vector<TimeInterval>;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sorts and merges overlapping or touching (gap of zero steps) intervals.
IntervalList canonicalize(IntervalList intervals);

// Complement over [0, inf). Input must be canonical.
IntervalList complement(const IntervalList& intervals);

// Safe intervals of one cell: sorted, disjoint, separated by at least one
// blocked step. Empty for statically blocked cells.
class SafeIntervalSet {
public:
    SafeIntervalSet() = default;
    explicit SafeIntervalSet(IntervalList intervals);

    static SafeIntervalSet always_safe() { return SafeIntervalSet({{0, kInfinity}}); }

    const IntervalList& intervals() const noexcept { return intervals_; }
    bool empty() const noexcept { return intervals_.empty(); }
    std::size_t size() const noexcept { return intervals_.size(); }
    const TimeInterval& operator[](std::size_t i) const { return intervals_[i]; }
    auto begin() const noexcept { return intervals_.begin(); }
    auto end() const noexcept { return intervals_.end(); }

    // Index of the safe interval containing t.
    std::optional<std::size_t> index_of(Step t) const noexcept;
    std::optional<TimeInterval> containing(Step t) const noexcept;
    bool is_safe(Step t) const noexcept { return index_of(t).has_value(); }
    // True iff [from, to] lies inside a single safe interval.
    bool is_safe_during(Step from, Step to) const noexcept;

    bool operator==(const SafeIntervalSet&) const = default;

private:
    IntervalList intervals_;
};

// leave_s may be +infinity: the obstacle parks in the cell for good.
struct OccupancyEvent {
    CellCoord cell;
    double enter_s = 0.0;
    double leave_s = 0.0;

    bool operator==(const OccupancyEvent&) const = default;
};

using BlockedTable = std::map<CellCoord, IntervalList>;

// floor(seconds / time_step) and ceil(...), with quotients within 1e-9 of an
// integer snapped to it so that decimal inputs such as 0.3 / 0.1 land exactly.
Step floor_steps(double seconds, double time_step);
Step ceil_steps(double seconds, double time_step);

// Each event blocks [floor(enter/dt), ceil(leave/dt)]; per cell the results are
// merged. Throws InputError on negative or reversed times.
BlockedTable blocked_from_events(std::span<const OccupancyEvent> events, double time_step);

SafeIntervalSet invert_to_safe(const IntervalList& blocked, bool cell_static);

std::optional<TimeInterval> safe_interval_containing(const SafeIntervalSet& set, Step t);

// Per-cell safe intervals for a whole map.
class SafeTable {
public:
    SafeTable() = default;
    SafeTable(const GridMap& map, const BlockedTable& blocked);

    const SafeIntervalSet& at(CellCoord c) const { return cells_[index(c)]; }
    const SafeIntervalSet& at(int row, int col) const { return at(CellCoord{row, col}); }
    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    // Largest finite blocked step over all traversable cells; -1 when none.
    Step last_blocked_step() const noexcept { return last_blocked_; }

private:
    std::size_t index(CellCoord c) const {
        return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(c.col);
    }

    int width_ = 0;
    int height_ = 0;
    Step last_blocked_ = -1;
    std::vector<SafeIntervalSet> cells_;
};

}  // namespace kinosipp
