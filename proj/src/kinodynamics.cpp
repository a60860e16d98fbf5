#include "kinosipp/kinodynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace kinosipp {

Heading heading_from_degrees(int deg) {
    const int norm = ((deg % 360) + 360) % 360;
    if (norm % 90 != 0) {
        throw ConfigError("heading must be a multiple of 90 degrees, got " + std::to_string(deg));
    }
    return static_cast<Heading>(norm / 90);
}

namespace {

constexpr long double kSnap = 1e-9L;

long double snapped(long double x) {
    const long double r = std::round(x);
    return std::abs(x - r) < kSnap ? r : x;
}

Step floor_snapped(long double x) { return static_cast<Step>(std::floor(snapped(x))); }
Step ceil_snapped(long double x) { return static_cast<Step>(std::ceil(snapped(x))); }

bool whole(long double x) { return std::abs(x - std::round(x)) < kSnap; }

// Builds the swept-cell table of a straight motion covering `cells` cells
// forward. enter(k)/leave(k) give the real step at which the unit disk first
// and last overlaps cell k (open overlap, so a disk resting on a cell centre
// touches only that cell).
std::vector<SweptCell> straight_sweep(int cells, Step duration,
                                      const std::function<long double(int)>& enter,
                                      const std::function<long double(int)>& leave) {
    std::vector<SweptCell> out;
    out.reserve(static_cast<std::size_t>(cells) + 1);
    for (int k = 0; k <= cells; ++k) {
        Step lb = k <= 1 ? 0 : floor_snapped(enter(k));
        Step ub = k + 1 > cells - 1 ? duration : ceil_snapped(leave(k));
        lb = std::clamp<Step>(lb, 0, duration);
        ub = std::clamp<Step>(ub, lb, duration);
        out.push_back({{0, k}, lb, ub});
    }
    return out;
}

}  // namespace

void PrimitiveParams::validate() const {
    if (!(max_speed > 0.0) || !(acceleration > 0.0) || !(time_step > 0.0)) {
        throw ConfigError("max_speed, acceleration and time_step must be positive");
    }
    const long double ramp = static_cast<long double>(max_speed) * max_speed / (2.0L * acceleration);
    if (!whole(ramp) || std::round(ramp) < 1.0L) {
        throw ConfigError("max_speed^2 / (2 acceleration) must be a whole number of cells");
    }
    if (rotation_duration < 1) {
        throw ConfigError("rotation_duration must be at least one step");
    }
    if (wait_duration != 1) {
        throw ConfigError("wait_duration must be exactly one step");
    }
    if (cruise_duration() < 1) {
        throw ConfigError("one cell at max_speed must take at least one step");
    }
}

int PrimitiveParams::ramp_cells() const {
    return static_cast<int>(std::llround(static_cast<long double>(max_speed) * max_speed /
                                         (2.0L * acceleration)));
}

Step PrimitiveParams::ramp_duration() const {
    return ceil_snapped(static_cast<long double>(max_speed) / (acceleration * time_step));
}

Step PrimitiveParams::cruise_duration() const {
    return static_cast<Step>(std::llround(1.0L / (static_cast<long double>(max_speed) * time_step)));
}

void check_primitive(const MotionPrimitive& prim) {
    const std::string who = "primitive " + std::to_string(prim.id) + " (" + prim.name + "): ";
    if (prim.duration < 1) {
        throw ConfigError(who + "duration must be a positive number of steps");
    }
    if (prim.heading_delta < -1 || prim.heading_delta > 1) {
        throw ConfigError(who + "heading_delta must be 0, +1 or -1 quarter turns");
    }
    if (prim.swept_cells.empty()) {
        throw ConfigError(who + "swept_cells must not be empty");
    }
    if (prim.swept_cells.front().offset != Offset{0, 0} || prim.swept_cells.front().lb != 0) {
        throw ConfigError(who + "first swept cell must be the source cell with lb = 0");
    }
    if (prim.swept_cells.back().offset != prim.displacement) {
        throw ConfigError(who + "last swept cell must be the target cell");
    }
    Step prev_lb = 0;
    for (const SweptCell& sc : prim.swept_cells) {
        if (sc.lb < prev_lb) {
            throw ConfigError(who + "lb values must be non-decreasing");
        }
        if (sc.lb < 0 || sc.lb > sc.ub || sc.ub > prim.duration) {
            throw ConfigError(who + "swept intervals must satisfy 0 <= lb <= ub <= duration");
        }
        prev_lb = sc.lb;
    }
}

PrimitiveSet::PrimitiveSet(std::vector<double> velocities, std::vector<MotionPrimitive> primitives,
                           double steps_per_cell, std::optional<PrimitiveParams> params)
    : velocities_(std::move(velocities)),
      primitives_(std::move(primitives)),
      steps_per_cell_(steps_per_cell),
      params_(params) {
    if (velocities_.empty()) {
        throw ConfigError("velocity table must not be empty");
    }
    if (!(steps_per_cell_ > 0.0)) {
        throw ConfigError("steps_per_cell must be positive");
    }
    rotated_.resize(primitives_.size());
    for (std::size_t i = 0; i < primitives_.size(); ++i) {
        const MotionPrimitive& p = primitives_[i];
        if (p.id != static_cast<int>(i)) {
            throw ConfigError("primitive ids must equal their position in the set");
        }
        if (!valid_velocity(p.source_velocity) || !valid_velocity(p.target_velocity)) {
            throw ConfigError("primitive " + std::to_string(p.id) + " references unknown velocity");
        }
        check_primitive(p);
        max_duration_ = std::max(max_duration_, p.duration);
        for (int h = 0; h < 4; ++h) {
            auto& cells = rotated_[i][static_cast<std::size_t>(h)];
            cells = p.swept_cells;
            for (SweptCell& sc : cells) {
                sc.offset = rotate(sc.offset, static_cast<Heading>(h));
            }
        }
    }
}

PrimitiveSet build_primitive_set(const PrimitiveParams& params) {
    params.validate();
    const int ramp = params.ramp_cells();
    const Step ramp_steps = params.ramp_duration();
    const long double a = params.acceleration;
    const long double dt = params.time_step;
    const long double real_ramp = static_cast<long double>(params.max_speed) / (a * dt);
    // Steps needed to cover x cells from rest.
    auto from_rest = [&](long double x) { return std::sqrt(2.0L * x / a) / dt; };

    std::vector<MotionPrimitive> prims;

    MotionPrimitive accel;
    accel.id = 0;
    accel.name = "accelerate";
    accel.source_velocity = 0;
    accel.target_velocity = 1;
    accel.displacement = {0, ramp};
    accel.duration = ramp_steps;
    accel.swept_cells = straight_sweep(
        ramp, ramp_steps, [&](int k) { return from_rest(k - 1); },
        [&](int k) { return from_rest(k + 1); });
    prims.push_back(accel);

    // Time reversal of the ramp: position x is reached real_ramp - from_rest(ramp - x)
    // steps after the start of braking.
    MotionPrimitive decel;
    decel.id = 1;
    decel.name = "decelerate";
    decel.source_velocity = 1;
    decel.target_velocity = 0;
    decel.displacement = {0, ramp};
    decel.duration = ramp_steps;
    decel.swept_cells = straight_sweep(
        ramp, ramp_steps, [&](int k) { return real_ramp - from_rest(ramp - (k - 1)); },
        [&](int k) { return real_ramp - from_rest(ramp - (k + 1)); });
    prims.push_back(decel);

    MotionPrimitive cruise;
    cruise.id = 2;
    cruise.name = "uniform";
    cruise.source_velocity = 1;
    cruise.target_velocity = 1;
    cruise.displacement = {0, 1};
    cruise.duration = params.cruise_duration();
    // A unit disk travelling one cell overlaps both cells throughout.
    cruise.swept_cells = {{{0, 0}, 0, cruise.duration}, {{0, 1}, 0, cruise.duration}};
    prims.push_back(cruise);

    for (int delta : {+1, -1}) {
        MotionPrimitive rot;
        rot.id = static_cast<int>(prims.size());
        rot.name = delta > 0 ? "rotate_left" : "rotate_right";
        rot.source_velocity = 0;
        rot.target_velocity = 0;
        rot.heading_delta = delta;
        rot.displacement = {0, 0};
        rot.duration = params.rotation_duration;
        rot.swept_cells = {{{0, 0}, 0, params.rotation_duration}};
        prims.push_back(rot);
    }

    return PrimitiveSet({0.0, params.max_speed}, std::move(prims), params.steps_per_cell(), params);
}

std::vector<const MotionPrimitive*> applicable_primitives(const Configuration& config,
                                                          const PrimitiveSet& set) {
    std::vector<const MotionPrimitive*> out;
    if (!set.valid_velocity(config.velocity)) {
        return out;
    }
    for (const MotionPrimitive& p : set.primitives()) {
        if (p.source_velocity != config.velocity) {
            continue;
        }
        if (p.rotation() && !set.allows_wait(config.velocity)) {
            continue;
        }
        out.push_back(&p);
    }
    return out;
}

Configuration apply_primitive(const Configuration& config, const MotionPrimitive& prim) {
    const Offset d = rotate(prim.displacement, config.heading);
    return {config.row + d.drow, config.col + d.dcol, turn(config.heading, prim.heading_delta),
            prim.target_velocity};
}

std::optional<Footprint> primitive_footprint(const Configuration& config,
                                             const MotionPrimitive& prim, const PrimitiveSet& set,
                                             const GridMap& map) {
    Footprint fp;
    const auto& cells = set.rotated_cells(prim.id, config.heading);
    fp.cells.reserve(cells.size());
    for (const SweptCell& sc : cells) {
        const CellCoord c{config.row + sc.offset.drow, config.col + sc.offset.dcol};
        if (!map.is_traversable(c)) {
            return std::nullopt;
        }
        fp.cells.push_back({c, sc.lb, sc.ub});
    }
    fp.target = apply_primitive(config, prim);
    fp.duration = prim.duration;
    return fp;
}

std::optional<Footprint> primitive_footprint(const Configuration& config,
                                             const MotionPrimitive& prim, const GridMap& map) {
    Footprint fp;
    fp.cells.reserve(prim.swept_cells.size());
    for (const SweptCell& sc : prim.swept_cells) {
        const Offset o = rotate(sc.offset, config.heading);
        const CellCoord c{config.row + o.drow, config.col + o.dcol};
        if (!map.is_traversable(c)) {
            return std::nullopt;
        }
        fp.cells.push_back({c, sc.lb, sc.ub});
    }
    fp.target = apply_primitive(config, prim);
    fp.duration = prim.duration;
    return fp;
}

}  // namespace kinosipp
