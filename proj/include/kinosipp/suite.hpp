#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinosipp/instance_generator.hpp"
#include "kinosipp/planners.hpp"

namespace kinosipp {

// A solved result the validator rejected.
class SuiteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunRecord {
    std::string planner;
    std::string map;
    double density = 0.0;
    std::uint64_t seed = 0;
    std::string status;  // status_name(), or "invalid" for a rejected plan
    std::optional<Step> cost;
    std::uint64_t expansions = 0;
    std::uint64_t generations = 0;
    double runtime_ms = 0.0;

    bool solved() const { return status == "solved"; }
    bool operator==(const RunRecord&) const = default;
};

struct SuiteMap {
    std::string name;
    GridMap map;
};

struct SuiteConfig {
    std::vector<SuiteMap> maps;
    std::vector<double> densities;
    std::size_t instances_per_cell = 10;
    std::vector<PlannerKind> planners{PlannerKind::AStarTS, PlannerKind::Sipp1, PlannerKind::Sipp2,
                                      PlannerKind::SippIP};
    SearchLimits limits;
    std::uint64_t base_seed = 1;
    GeneratorOptions generator;
    // Per-planner generation limits overriding limits.max_generated.
    std::vector<std::pair<PlannerKind, std::uint64_t>> planner_limits;
    std::function<void(const RunRecord&)> on_record;
};

struct CostExcess {
    std::size_t common = 0;  // instances solved by both
    std::size_t above_0 = 0;
    std::size_t above_5 = 0;   // more than 5 percent
    std::size_t above_50 = 0;  // more than 50 percent
    std::size_t below = 0;     // cheaper than the reference (should never happen)
};

struct SuiteResult {
    std::vector<RunRecord> records;  // sorted by (map, density, seed, planner)

    std::vector<std::string> planners() const;
    std::vector<std::pair<std::string, double>> buckets() const;  // (map, density)

    double success_rate(const std::string& planner, const std::string& map, double density) const;
    // Over instances solved by both `planner` and `reference`.
    CostExcess cost_excess(const std::string& planner, const std::string& reference,
                           const std::string& map, double density) const;
    // Median runtime / expansions over instances every listed planner solved.
    std::optional<double> median_runtime_ms(const std::string& planner,
                                            const std::vector<std::string>& common_with,
                                            const std::string& map, double density) const;
    std::optional<double> median_expansions(const std::string& planner,
                                            const std::vector<std::string>& common_with,
                                            const std::string& map, double density) const;
    double mean_runtime_ms(const std::string& planner, const std::string& map, double density) const;
};

// Seed of the i-th instance of a bucket.
std::uint64_t instance_seed(std::uint64_t base_seed, std::size_t map_index,
                            std::size_t density_index, std::size_t i);

// Runs every planner on every generated instance and validates every solved
// plan. A rejected plan throws SuiteError naming the planner, except for the
// classic SIPP baseline, which is known to produce kinodynamically invalid
// plans; those are recorded with status "invalid".
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace kinosipp
