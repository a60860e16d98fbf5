#include "kinosipp/instance_generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

namespace kinosipp {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// BFS from `from`; neighbor order shuffled per expansion. Empty if unreachable.
std::vector<CellCoord> random_shortest_path(const GridMap& map, CellCoord from, CellCoord to,
                                            Rng& rng) {
    std::vector<std::int64_t> parent(map.cell_count(), -1);
    std::queue<CellCoord> q;
    parent[map.index(from)] = static_cast<std::int64_t>(map.index(from));
    q.push(from);
    std::array<CellCoord, 4> dirs{{{0, 1}, {-1, 0}, {0, -1}, {1, 0}}};
    while (!q.empty()) {
        const CellCoord c = q.front();
        q.pop();
        if (c == to) {
            break;
        }
        std::shuffle(dirs.begin(), dirs.end(), rng);
        for (const CellCoord& d : dirs) {
            const CellCoord n{c.row + d.row, c.col + d.col};
            if (map.is_traversable(n) && parent[map.index(n)] < 0) {
                parent[map.index(n)] = static_cast<std::int64_t>(map.index(c));
                q.push(n);
            }
        }
    }
    std::vector<CellCoord> path;
    if (parent[map.index(to)] < 0) {
        return path;
    }
    for (CellCoord c = to; c != from; c = map.coord(static_cast<std::size_t>(parent[map.index(c)]))) {
        path.push_back(c);
    }
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::size_t obstacle_count(const GridMap& map, double density) {
    if (!(density >= 0.0) || density > 1.0) {
        throw InputError("density must lie in [0, 1]");
    }
    return static_cast<std::size_t>(std::llround(density * static_cast<double>(map.traversable_count())));
}

ProblemInstance generate_instance(const GridMap& map, double density, std::uint64_t seed,
                                  const GeneratorOptions& options) {
    if (options.mo_speeds.empty()) {
        throw InputError("need at least one obstacle speed");
    }
    std::vector<CellCoord> free;
    for (std::size_t i = 0; i < map.cell_count(); ++i) {
        if (map.is_traversable(map.coord(i))) {
            free.push_back(map.coord(i));
        }
    }
    if (free.size() < 2) {
        throw InputError("map needs at least two traversable cells");
    }

    ProblemInstance inst;
    inst.map = map;
    inst.primitives = std::make_shared<const PrimitiveSet>(build_primitive_set(options.agent));
    inst.time_step = options.agent.time_step;
    inst.seed = seed;
    inst.start = {free.front().row, free.front().col, Heading::East, 0};
    inst.goal = free.back();

    std::vector<CellCoord> spawn;
    for (const CellCoord& c : free) {
        if (c != free.front() && c != free.back()) {
            spawn.push_back(c);
        }
    }

    Rng rng(seed);
    const std::size_t count = spawn.size() < 2 ? 0 : obstacle_count(map, density);
    const double dt = options.agent.time_step;
    for (std::size_t k = 0; k < count; ++k) {
        const CellCoord from = spawn[pick(rng, spawn.size())];
        CellCoord to = spawn[pick(rng, spawn.size())];
        while (to == from) {
            to = spawn[pick(rng, spawn.size())];
        }
        std::vector<CellCoord> path = random_shortest_path(map, from, to, rng);
        if (path.empty()) {
            path.push_back(from);
        }
        const double speed = options.mo_speeds[pick(rng, options.mo_speeds.size())];
        // Uniform motion at that speed: both cells are touched for the whole move.
        const Step per_cell = std::max<Step>(1, std::llround(1.0 / (speed * dt)));

        Step entered = 0;  // first step the current cell is touched
        Step t = 0;        // step the obstacle is centred on the current cell
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (std::bernoulli_distribution(options.wait_probability)(rng)) {
                t += std::uniform_int_distribution<Step>(0, options.max_wait)(rng);
            }
            const Step leave = t + per_cell;
            inst.events.push_back({path[i], static_cast<double>(entered) * dt,
                                   static_cast<double>(leave) * dt});
            entered = t;
            t = leave;
        }
        inst.events.push_back(
            {path.back(), static_cast<double>(entered) * dt, static_cast<double>(t) * dt});
    }
    inst.finalize();
    return inst;
}

}  // namespace kinosipp
