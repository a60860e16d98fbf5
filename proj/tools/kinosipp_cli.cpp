// kinosipp command-line front end: gen, plan, bench, validate, project.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kinosipp/instance_generator.hpp"
#include "kinosipp/io.hpp"
#include "kinosipp/planners.hpp"
#include "kinosipp/report.hpp"
#include "kinosipp/suite.hpp"
#include "kinosipp/validation.hpp"

namespace fs = std::filesystem;
using namespace kinosipp;

namespace {

enum Exit { kOk = 0, kInvalidTrajectory = 1, kNoSolution = 2, kResourceLimit = 3, kBadInput = 4 };

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t limit_generated = SearchLimits{}.max_generated;
    std::string planner = "sipp-ip";
    bool identical_only_open = false;
    std::string out;
};

SearchLimits limits_from(const Globals& g) {
    SearchLimits l;
    l.max_generated = g.limit_generated;
    l.identical_only_open = g.identical_only_open;
    return l;
}

PlannerKind planner_from(const std::string& name) {
    auto k = parse_planner(name);
    if (!k) {
        throw InputError("unknown planner '" + name + "'");
    }
    return *k;
}

std::string interval_text(const IntervalList& l) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < l.size(); ++i) {
        s << (i ? "," : "") << '[' << l[i].lower << ',';
        if (l[i].unbounded()) {
            s << "inf)";
        } else {
            s << l[i].upper << ']';
        }
    }
    s << '}';
    return s.str();
}

int emit(const Json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        write_json_file(out, j);
    }
    return kOk;
}

int cmd_gen(const Globals& g, const std::string& map_path, double density) {
    ProblemInstance inst = generate_instance(load_movingai(map_path), density, g.seed);
    inst.map_path = map_path;
    if (!g.out.empty()) {
        const fs::path base = fs::absolute(g.out).parent_path();
        inst.map_path = fs::relative(fs::absolute(map_path), base).generic_string();
    }
    std::cerr << "generated " << inst.events.size() << " occupancy events, "
              << obstacle_count(inst.map, density) << " moving obstacles\n";
    return emit(instance_to_json(inst), g.out);
}

int cmd_plan(const Globals& g, const std::string& instance_path, bool trace) {
    const ProblemInstance inst = load_instance(instance_path);
    const PlannerKind kind = planner_from(g.planner);
    SearchLimits limits = limits_from(g);
    limits.record_trace = trace;
    const PlanOutcome out = find_path(kind, inst, limits);
    std::cerr << planner_name(kind) << ": " << status_name(out.status);
    if (out.trajectory) {
        std::cerr << " cost " << out.trajectory->cost;
    }
    std::cerr << " expansions " << out.expansions << " generations " << out.generations << " "
              << out.runtime_s * 1000.0 << " ms\n";
    emit(outcome_to_json(out, kind), g.out);
    switch (out.status) {
        case PlanStatus::Solved: return kOk;
        case PlanStatus::NoSolution: return kNoSolution;
        case PlanStatus::ResourceLimit: return kResourceLimit;
    }
    return kOk;
}

int cmd_validate(const Globals& g, const std::string& instance_path,
                 const std::string& trajectory_path) {
    const ProblemInstance inst = load_instance(instance_path);
    Json tj = read_json_file(trajectory_path);
    if (tj.contains("trajectory")) {  // a `plan` result file
        tj = tj.at("trajectory");
    }
    const ValidationReport rep = validate(trajectory_from_json(tj, &inst), inst);
    for (const Violation& v : rep.violations) {
        std::cerr << violation_name(v.kind) << " at t=" << v.time;
        if (v.cell) {
            std::cerr << " cell (" << v.cell->row << "," << v.cell->col << ")";
        }
        std::cerr << ": " << v.detail << '\n';
    }
    std::cerr << (rep.valid ? "valid\n" : "invalid\n");
    emit(report_to_json(rep), g.out);
    return rep.valid ? kOk : kInvalidTrajectory;
}

int cmd_project(const Globals& g, const std::string& fixture_path, bool naive) {
    const ProjectionFixture f = fixture_from_json(read_json_file(fixture_path));
    const auto legs = f.legs();
    ProjectionTrace trace;
    const ProjectionResult r = naive ? project_naive(f.departure, legs, f.duration)
                                     : project_intervals(f.departure, legs, f.duration, &trace);
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
        std::cout << "cell " << i << ": " << interval_text(trace.stages[i]) << '\n';
    }
    std::cout << "arrival: " << interval_text(r) << '\n';
    if (!g.out.empty()) {
        Json j = {{"format_version", kFormatVersion}, {"arrival", Json::array()}};
        for (const TimeInterval& iv : r) {
            j["arrival"].push_back(interval_to_json(iv));
        }
        write_json_file(g.out, j);
    }
    return kOk;
}

int cmd_bench(const Globals& g, const std::vector<std::string>& maps,
              const std::vector<double>& densities, std::size_t instances,
              const std::vector<std::string>& planners, std::uint64_t astar_limit) {
    SuiteConfig cfg;
    for (const std::string& m : maps) {
        cfg.maps.push_back({m, load_movingai(m)});
    }
    cfg.densities = densities;
    cfg.instances_per_cell = instances;
    cfg.base_seed = g.seed;
    cfg.limits = limits_from(g);
    if (!planners.empty()) {
        cfg.planners.clear();
        for (const std::string& p : planners) {
            cfg.planners.push_back(planner_from(p));
        }
    }
    if (astar_limit > 0) {
        cfg.planner_limits.push_back({PlannerKind::AStarTS, astar_limit});
    }
    cfg.on_record = [](const RunRecord& r) {
        std::cerr << r.planner << ' ' << r.map << ' ' << r.density << ' ' << r.seed << ' '
                  << r.status << ' ' << r.runtime_ms << " ms\n";
    };
    const SuiteResult result = run_suite(cfg);
    const fs::path dir = g.out.empty() ? fs::path("bench_out") : fs::path(g.out);
    fs::create_directories(dir);
    write_csv(result, dir / "results.csv");
    emit_plots(result, dir);

    for (const auto& [map, density] : result.buckets()) {
        std::cout << map << " density " << density << '\n';
        for (const std::string& p : result.planners()) {
            std::cout << "  " << p << " SR " << result.success_rate(p, map, density) << " mean "
                      << result.mean_runtime_ms(p, map, density) << " ms";
            if (p == "sipp1" || p == "sipp2") {
                const CostExcess e = result.cost_excess(p, "sipp-ip", map, density);
                std::cout << " common " << e.common << " >0% " << e.above_0 << " >5% " << e.above_5
                          << " >50% " << e.above_50;
            }
            std::cout << '\n';
        }
    }
    std::cerr << "wrote " << (dir / "results.csv").string() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kinodynamic safe-interval planning toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--limit-generated", g.limit_generated, "Generated-node limit per search");
    app.add_option("--planner", g.planner, "astar|sipp|sipp1|sipp2|sipp-ip")
        ->check(CLI::IsMember({"astar", "sipp", "sipp1", "sipp2", "sipp-ip"}));
    app.add_flag("--paper-exact-open", g.identical_only_open,
                 "Skip only identical successors instead of dominance pruning");
    app.add_option("--out", g.out, "Output file (directory for bench)");

    std::string map_path, instance_path, trajectory_path, fixture_path;
    double density = 0.1;
    bool trace = false, naive = false;
    std::vector<std::string> maps, planners;
    std::vector<double> densities{0.1};
    std::size_t instances = 10;
    std::uint64_t astar_limit = 0;

    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--map", map_path, "MovingAI map")->required();
    gen->add_option("--density", density, "Moving obstacles per free cell");

    auto* plan = app.add_subcommand("plan", "Plan on an instance file");
    plan->add_option("instance", instance_path, "Instance JSON")->required();
    plan->add_flag("--trace", trace, "Record popped nodes");

    auto* val = app.add_subcommand("validate", "Validate a trajectory against an instance");
    val->add_option("instance", instance_path, "Instance JSON")->required();
    val->add_option("trajectory", trajectory_path, "Trajectory or plan JSON")->required();

    auto* proj = app.add_subcommand("project", "Project an interval through a sweep fixture");
    proj->add_option("fixture", fixture_path, "Projection fixture JSON")->required();
    proj->add_flag("--naive", naive, "Use the step-by-step reference");

    auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
    bench->add_option("--maps", maps, "MovingAI maps")->required()->delimiter(',');
    bench->add_option("--densities", densities, "Densities")->delimiter(',');
    bench->add_option("--instances", instances, "Instances per (map, density)");
    bench->add_option("--planners", planners, "Planners to run")->delimiter(',');
    bench->add_option("--astar-limit", astar_limit, "Generated-node limit for astar only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*gen) return cmd_gen(g, map_path, density);
        if (*plan) return cmd_plan(g, instance_path, trace);
        if (*val) return cmd_validate(g, instance_path, trajectory_path);
        if (*proj) return cmd_project(g, fixture_path, naive);
        if (*bench) return cmd_bench(g, maps, densities, instances, planners, astar_limit);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kOk;
}
