#pragma once

#include <chrono>
#include <cstdint>
#include <queue>
#include <tuple>
#include <vector>

#include "kinosipp/instance.hpp"
#include "kinosipp/planners.hpp"
#include "kinosipp/projection.hpp"

namespace kinosipp::detail {

class ConfigIndexer {
public:
    ConfigIndexer(const GridMap& map, const PrimitiveSet& set)
        : width_(static_cast<std::size_t>(map.width())),
          velocities_(set.velocities().size()),
          size_(map.cell_count() * 4 * velocities_) {}

    std::size_t operator()(const Configuration& c) const noexcept {
        const std::size_t cell =
            static_cast<std::size_t>(c.row) * width_ + static_cast<std::size_t>(c.col);
        return (cell * 4 + static_cast<std::size_t>(c.heading)) * velocities_ +
               static_cast<std::size_t>(c.velocity);
    }
    std::size_t size() const noexcept { return size_; }

private:
    std::size_t width_;
    std::size_t velocities_;
    std::size_t size_;
};

// OPEN ordering: f, then smaller h, then (row, col, heading, velocity, t_l).
struct OpenEntry {
    Step f = 0;
    Step h = 0;
    Configuration config;
    Step tl = 0;
    std::uint32_t node = 0;
};

struct OpenAfter {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const noexcept {
        return std::tie(a.f, a.h, a.config, a.tl) > std::tie(b.f, b.h, b.config, b.tl);
    }
};

using OpenQueue = std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenAfter>;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Fills `out` with the legs of `fp` against the instance's safe table.
void legs_for(const Footprint& fp, const SafeTable& safe, std::vector<SweepLeg>& out);

// Heuristic bound to an instance's goal.
class GoalHeuristic {
public:
    explicit GoalHeuristic(const ProblemInstance& instance)
        : goal_(instance.goal_mode == GoalMode::ExactConfiguration ? instance.goal_config.cell()
                                                                    : instance.goal),
          steps_per_cell_(instance.primitives->steps_per_cell()) {}

    Step operator()(const Configuration& c) const { return heuristic(c, goal_, steps_per_cell_); }

private:
    CellCoord goal_;
    double steps_per_cell_;
};

// Start configuration is safe at start_time.
bool start_is_safe(const ProblemInstance& instance);

}  // namespace kinosipp::detail
