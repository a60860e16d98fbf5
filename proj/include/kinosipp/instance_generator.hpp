#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kinosipp/instance.hpp"

namespace kinosipp {

struct GeneratorOptions {
    PrimitiveParams agent;                   // agent primitives and time step
    std::vector<double> mo_speeds{1.0, 2.0}; // cells/s
    double wait_probability = 0.2;           // per visited cell
    Step max_wait = 20;                      // steps, uniform in [0, max_wait]
};

// round(density * free cells).
std::size_t obstacle_count(const GridMap& map, double density);

// Random instance: the agent goes from the first traversable cell in
// row-major order (facing east, at rest) to the last one. Each moving
// obstacle walks a shortest path, ties broken at random, between two random
// free cells other than the agent's, at a random speed with random waits,
// and disappears at its goal. Fully determined by (map, density, seed,
// options). The result is finalized.
ProblemInstance generate_instance(const GridMap& map, double density, std::uint64_t seed,
                                  const GeneratorOptions& options = {});

}  // namespace kinosipp
