#pragma once

// Random fixtures shared by the unit tests and the acceptance binary.

#include <random>

#include "kinosipp/instance_generator.hpp"
#include "kinosipp/io.hpp"

namespace kinosipp::testing {

inline Step uniform(std::mt19937_64& rng, Step lo, Step hi) {
    return std::uniform_int_distribution<Step>(lo, hi)(rng);
}

// Up to `max_cells` swept cells with non-decreasing lb, duration up to
// `max_duration`, up to `max_blocks` blocked spans per cell (so at most
// max_blocks + 1 safe intervals) inside [0, horizon].
inline ProjectionFixture random_fixture(std::mt19937_64& rng, int max_cells = 8,
                                        Step max_duration = 60, int max_blocks = 5,
                                        Step horizon = 500) {
    ProjectionFixture f;
    f.duration = uniform(rng, 1, max_duration);
    const int n = static_cast<int>(uniform(rng, 1, max_cells));
    std::vector<Step> lbs;
    for (int i = 0; i < n; ++i) {
        lbs.push_back(i == 0 ? 0 : uniform(rng, 0, f.duration));
    }
    std::sort(lbs.begin(), lbs.end());
    for (Step lb : lbs) {
        ProjectionFixture::Cell c;
        c.lb = lb;
        c.ub = uniform(rng, lb, f.duration);
        IntervalList blocked;
        const int blocks = static_cast<int>(uniform(rng, 0, max_blocks));
        for (int b = 0; b < blocks; ++b) {
            const Step a = uniform(rng, 0, horizon);
            blocked.push_back({a, std::min(horizon, a + uniform(rng, 0, 40))});
        }
        c.safe = SafeIntervalSet(complement(canonicalize(blocked)));
        f.cells.push_back(std::move(c));
    }
    const Step a = uniform(rng, 0, horizon - 1);
    f.departure = {a, uniform(rng, a, std::min(horizon, a + 200))};
    return f;
}

inline GridMap random_map(std::mt19937_64& rng, int width, int height, double wall_probability) {
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(width * height));
    std::bernoulli_distribution wall(wall_probability);
    for (auto& c : cells) {
        c = wall(rng) ? 0 : 1;
    }
    cells.front() = 1;
    cells.back() = 1;
    return GridMap(width, height, std::move(cells));
}

struct FuzzOptions {
    int size = 16;
    int max_obstacles = 10;
    Step horizon = 500;
    double wall_probability = 0.15;
};

// Random map, up to max_obstacles moving obstacles, agent between opposite
// corners with a random start heading. Alternates between the default
// primitives and a coarser set (1 cell/s, 0.5 cells/s^2, 0.5 s steps).
inline ProblemInstance fuzz_instance(std::uint64_t seed, const FuzzOptions& o = {}) {
    std::mt19937_64 rng(seed);
    const GridMap map = random_map(rng, o.size, o.size, o.wall_probability);
    GeneratorOptions gen;
    if (seed % 2 == 1) {
        gen.agent.max_speed = 1.0;
        gen.agent.acceleration = 0.5;
        gen.agent.time_step = 0.5;
        gen.agent.rotation_duration = 2;
    }
    const auto mos = static_cast<double>(uniform(rng, 0, o.max_obstacles));
    const double density = mos / static_cast<double>(map.traversable_count());
    ProblemInstance inst = generate_instance(map, density, seed, gen);
    inst.start.heading = static_cast<Heading>(uniform(rng, 0, 3));
    inst.horizon_override = o.horizon;
    inst.finalize();
    return inst;
}

}  // namespace kinosipp::testing
