#include "kinosipp/suite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "kinosipp/validation.hpp"

namespace kinosipp {

namespace {

bool in_bucket(const RunRecord& r, const std::string& map, double density) {
    return r.map == map && r.density == density;
}

std::optional<double> median(std::vector<double> v) {
    if (v.empty()) {
        return std::nullopt;
    }
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <class Metric>
std::optional<double> common_median(const std::vector<RunRecord>& records, const std::string& planner,
                                    const std::vector<std::string>& common_with,
                                    const std::string& map, double density, Metric metric) {
    std::map<std::uint64_t, std::set<std::string>> solved_by;
    for (const RunRecord& r : records) {
        if (in_bucket(r, map, density) && r.solved()) {
            solved_by[r.seed].insert(r.planner);
        }
    }
    std::vector<double> values;
    for (const RunRecord& r : records) {
        if (!in_bucket(r, map, density) || r.planner != planner || !r.solved()) {
            continue;
        }
        const auto& who = solved_by[r.seed];
        if (std::all_of(common_with.begin(), common_with.end(),
                        [&](const std::string& p) { return who.count(p) > 0; })) {
            values.push_back(metric(r));
        }
    }
    return median(std::move(values));
}

}  // namespace

std::vector<std::string> SuiteResult::planners() const {
    std::vector<std::string> out;
    for (PlannerKind k : kAllPlanners) {
        const std::string name(planner_name(k));
        if (std::any_of(records.begin(), records.end(),
                        [&](const RunRecord& r) { return r.planner == name; })) {
            out.push_back(name);
        }
    }
    return out;
}

std::vector<std::pair<std::string, double>> SuiteResult::buckets() const {
    std::set<std::pair<std::string, double>> s;
    for (const RunRecord& r : records) {
        s.insert({r.map, r.density});
    }
    return {s.begin(), s.end()};
}

double SuiteResult::success_rate(const std::string& planner, const std::string& map,
                                 double density) const {
    std::size_t total = 0;
    std::size_t solved = 0;
    for (const RunRecord& r : records) {
        if (r.planner == planner && in_bucket(r, map, density)) {
            ++total;
            solved += r.solved() ? 1 : 0;
        }
    }
    return total == 0 ? 0.0 : static_cast<double>(solved) / static_cast<double>(total);
}

CostExcess SuiteResult::cost_excess(const std::string& planner, const std::string& reference,
                                    const std::string& map, double density) const {
    std::map<std::uint64_t, Step> ref;
    for (const RunRecord& r : records) {
        if (r.planner == reference && in_bucket(r, map, density) && r.solved()) {
            ref[r.seed] = *r.cost;
        }
    }
    CostExcess e;
    for (const RunRecord& r : records) {
        if (r.planner != planner || !in_bucket(r, map, density) || !r.solved()) {
            continue;
        }
        auto it = ref.find(r.seed);
        if (it == ref.end()) {
            continue;
        }
        ++e.common;
        const double base = static_cast<double>(it->second);
        const double c = static_cast<double>(*r.cost);
        e.below += c < base ? 1 : 0;
        e.above_0 += c > base ? 1 : 0;
        e.above_5 += c > base * 1.05 ? 1 : 0;
        e.above_50 += c > base * 1.5 ? 1 : 0;
    }
    return e;
}

std::optional<double> SuiteResult::median_runtime_ms(const std::string& planner,
                                                     const std::vector<std::string>& common_with,
                                                     const std::string& map, double density) const {
    return common_median(records, planner, common_with, map, density,
                         [](const RunRecord& r) { return r.runtime_ms; });
}

std::optional<double> SuiteResult::median_expansions(const std::string& planner,
                                                     const std::vector<std::string>& common_with,
                                                     const std::string& map, double density) const {
    return common_median(records, planner, common_with, map, density,
                         [](const RunRecord& r) { return static_cast<double>(r.expansions); });
}

double SuiteResult::mean_runtime_ms(const std::string& planner, const std::string& map,
                                    double density) const {
    double sum = 0.0;
    std::size_t n = 0;
    for (const RunRecord& r : records) {
        if (r.planner == planner && in_bucket(r, map, density)) {
            sum += r.runtime_ms;
            ++n;
        }
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

std::uint64_t instance_seed(std::uint64_t base_seed, std::size_t map_index,
                            std::size_t density_index, std::size_t i) {
    return base_seed * 1'000'000 + map_index * 10'000 + density_index * 1'000 + i;
}

SuiteResult run_suite(const SuiteConfig& config) {
    SuiteResult result;
    for (std::size_t m = 0; m < config.maps.size(); ++m) {
        const SuiteMap& sm = config.maps[m];
        for (std::size_t d = 0; d < config.densities.size(); ++d) {
            const double density = config.densities[d];
            for (std::size_t i = 0; i < config.instances_per_cell; ++i) {
                const std::uint64_t seed = instance_seed(config.base_seed, m, d, i);
                ProblemInstance inst = generate_instance(sm.map, density, seed, config.generator);
                inst.map_path = sm.name;
                for (PlannerKind k : config.planners) {
                    SearchLimits limits = config.limits;
                    for (const auto& [pk, cap] : config.planner_limits) {
                        if (pk == k) {
                            limits.max_generated = cap;
                        }
                    }
                    const PlanOutcome out = find_path(k, inst, limits);
                    RunRecord rec;
                    rec.planner = std::string(planner_name(k));
                    rec.map = sm.name;
                    rec.density = density;
                    rec.seed = seed;
                    rec.status = std::string(status_name(out.status));
                    rec.expansions = out.expansions;
                    rec.generations = out.generations;
                    rec.runtime_ms = out.runtime_s * 1000.0;
                    if (out.status == PlanStatus::Solved) {
                        rec.cost = out.trajectory->cost;
                        const ValidationReport rep = validate(*out.trajectory, inst);
                        if (!rep.valid) {
                            if (k != PlannerKind::SippClassic) {
                                throw SuiteError(rec.planner + " returned an invalid plan on " +
                                                 sm.name + " density " + std::to_string(density) +
                                                 " seed " + std::to_string(seed) + ": " +
                                                 std::string(violation_name(rep.violations[0].kind)));
                            }
                            rec.status = "invalid";
                            rec.cost.reset();
                        }
                    }
                    if (config.on_record) {
                        config.on_record(rec);
                    }
                    result.records.push_back(std::move(rec));
                }
            }
        }
    }
    std::sort(result.records.begin(), result.records.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tie(a.map, a.density, a.seed, a.planner) < std::tie(b.map, b.density, b.seed, b.planner);
    });
    return result;
}

}  // namespace kinosipp
