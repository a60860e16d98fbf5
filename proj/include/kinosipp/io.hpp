#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "kinosipp/instance.hpp"
#include "kinosipp/planners.hpp"
#include "kinosipp/projection.hpp"
#include "kinosipp/validation.hpp"

namespace kinosipp {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::json;

// Infinite interval bounds are written as null.
Json interval_to_json(const TimeInterval& iv);
TimeInterval interval_from_json(const Json& j);

Json params_to_json(const PrimitiveParams& p);
PrimitiveParams params_from_json(const Json& j);

Json primitive_set_to_json(const PrimitiveSet& set);
PrimitiveSet primitive_set_from_json(const Json& j);

Json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

// With a map_path set the map is referenced, otherwise it is written inline
// as a "map" array of row strings. Primitives are written as their
// generating params when the set carries them.
Json instance_to_json(const ProblemInstance& inst);
// Relative map paths are resolved against base_dir, then the working
// directory. The result is finalized.
ProblemInstance instance_from_json(const Json& j, const std::filesystem::path& base_dir = {});
ProblemInstance load_instance(const std::filesystem::path& path);

Json trajectory_to_json(const Trajectory& t);
// Missing start/start_time fall back to the instance, when given.
Trajectory trajectory_from_json(const Json& j, const ProblemInstance* inst = nullptr);

Json report_to_json(const ValidationReport& r);
Json outcome_to_json(const PlanOutcome& o, PlannerKind planner);

// A standalone projection problem: departure interval, duration and one
// entry per swept cell with its lb/ub and safe intervals.
struct ProjectionFixture {
    TimeInterval departure;
    Step duration = 0;
    struct Cell {
        Step lb = 0;
        Step ub = 0;
        SafeIntervalSet safe;
    };
    std::vector<Cell> cells;

    std::vector<SweepLeg> legs() const;
};

Json fixture_to_json(const ProjectionFixture& f);
ProjectionFixture fixture_from_json(const Json& j);

// Throws std::runtime_error naming the path.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace kinosipp
