#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinosipp/grid_map.hpp"
#include "kinosipp/intervals.hpp"

namespace kinosipp {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Axis-aligned orientation; quarter turns counter-clockwise from east.
// Rows grow downward, so North is row - 1.
enum class Heading : std::uint8_t { East = 0, North = 1, West = 2, South = 3 };

constexpr int degrees(Heading h) noexcept { return 90 * static_cast<int>(h); }
Heading heading_from_degrees(int deg);

constexpr Heading turn(Heading h, int quarter_turns) noexcept {
    return static_cast<Heading>(((static_cast<int>(h) + quarter_turns) % 4 + 4) % 4);
}

// Cell offset expressed in the frame of an east-facing agent.
struct Offset {
    int drow = 0;
    int dcol = 0;

    auto operator<=>(const Offset&) const = default;
};

// Rotates an east-frame offset into the frame of heading h.
constexpr Offset rotate(Offset o, Heading h) noexcept {
    for (int i = 0; i < static_cast<int>(h); ++i) {
        o = {-o.dcol, o.drow};
    }
    return o;
}

struct Configuration {
    int row = 0;
    int col = 0;
    Heading heading = Heading::East;
    int velocity = 0;  // index into PrimitiveSet::velocities()

    CellCoord cell() const noexcept { return {row, col}; }
    auto operator<=>(const Configuration&) const = default;
};

struct SweptCell {
    Offset offset;
    Step lb = 0;
    Step ub = 0;

    bool operator==(const SweptCell&) const = default;
};

struct MotionPrimitive {
    int id = 0;
    std::string name;
    int source_velocity = 0;
    int target_velocity = 0;
    int heading_delta = 0;  // quarter turns: 0, +1 (+90 deg) or -1 (-90 deg)
    Offset displacement;
    Step duration = 1;
    std::vector<SweptCell> swept_cells;

    bool accelerating() const noexcept { return target_velocity > source_velocity; }
    bool decelerating() const noexcept { return target_velocity < source_velocity; }
    bool uniform() const noexcept { return target_velocity == source_velocity; }
    bool rotation() const noexcept { return heading_delta != 0; }

    bool operator==(const MotionPrimitive&) const = default;
};

struct PrimitiveParams {
    double max_speed = 2.0;      // cells/s
    double acceleration = 0.5;   // cells/s^2
    double time_step = 0.1;      // s
    Step rotation_duration = 20; // steps per quarter turn
    Step wait_duration = 1;      // steps

    // Throws ConfigError.
    void validate() const;

    int ramp_cells() const;          // max_speed^2 / (2 a)
    Step ramp_duration() const;      // ceil(max_speed / (a dt))
    Step cruise_duration() const;    // round(1 / (max_speed dt))
    double steps_per_cell() const { return 1.0 / (max_speed * time_step); }

    bool operator==(const PrimitiveParams&) const = default;
};

// A velocity table plus the primitives defined over it. Primitive ids equal
// their index. Immutable after construction.
class PrimitiveSet {
public:
    PrimitiveSet(std::vector<double> velocities, std::vector<MotionPrimitive> primitives,
                 double steps_per_cell, std::optional<PrimitiveParams> params = std::nullopt);

    const std::vector<double>& velocities() const noexcept { return velocities_; }
    const std::vector<MotionPrimitive>& primitives() const noexcept { return primitives_; }
    const MotionPrimitive& at(int id) const { return primitives_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const noexcept { return primitives_.size(); }

    bool valid_velocity(int v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < velocities_.size();
    }
    // Waiting is allowed only at velocity value exactly 0.
    bool allows_wait(int v) const noexcept { return valid_velocity(v) && velocities_[v] == 0.0; }

    // Lower bound on steps needed per cell of Manhattan distance.
    double steps_per_cell() const noexcept { return steps_per_cell_; }
    Step max_duration() const noexcept { return max_duration_; }
    const std::optional<PrimitiveParams>& params() const noexcept { return params_; }

    // Swept cells of primitive `id` rotated into heading h.
    const std::vector<SweptCell>& rotated_cells(int id, Heading h) const {
        return rotated_[static_cast<std::size_t>(id)][static_cast<std::size_t>(h)];
    }

private:
    std::vector<double> velocities_;
    std::vector<MotionPrimitive> primitives_;
    std::vector<std::array<std::vector<SweptCell>, 4>> rotated_;
    double steps_per_cell_ = 1.0;
    Step max_duration_ = 0;
    std::optional<PrimitiveParams> params_;
};

// Checks the structural invariants of one primitive; throws ConfigError.
void check_primitive(const MotionPrimitive& prim);

// Accelerate, decelerate and uniform motions plus +/-90 deg rotations, over the
// velocity table {0, max_speed}. Waiting is left to the planners.
PrimitiveSet build_primitive_set(const PrimitiveParams& params);

std::vector<const MotionPrimitive*> applicable_primitives(const Configuration& config,
                                                          const PrimitiveSet& set);

Configuration apply_primitive(const Configuration& config, const MotionPrimitive& prim);

struct FootprintCell {
    CellCoord cell;
    Step lb = 0;
    Step ub = 0;

    bool operator==(const FootprintCell&) const = default;
};

struct Footprint {
    std::vector<FootprintCell> cells;
    Configuration target;
    Step duration = 0;
};

// Absolute swept cells of `prim` executed from `config`; nullopt when any
// swept cell is blocked or off the map. Obstacles in time are not considered.
std::optional<Footprint> primitive_footprint(const Configuration& config,
                                             const MotionPrimitive& prim, const PrimitiveSet& set,
                                             const GridMap& map);
std::optional<Footprint> primitive_footprint(const Configuration& config,
                                             const MotionPrimitive& prim, const GridMap& map);

}  // namespace kinosipp
