#include "kinosipp/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kinosipp {

namespace {

void check_version(const Json& j, const char* what) {
    if (j.contains("format_version") && j.at("format_version").get<int>() != kFormatVersion) {
        throw InputError(std::string(what) + ": unsupported format_version " +
                         j.at("format_version").dump());
    }
}

Step step_or_inf(const Json& j) {
    return j.is_null() ? kInfinity : j.get<Step>();
}

Json inf_or_step(Step t) {
    return is_infinite(t) ? Json(nullptr) : Json(t);
}

CellCoord cell_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InputError("cell must be [row, col]");
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Json interval_to_json(const TimeInterval& iv) {
    return Json::array({iv.lower, inf_or_step(iv.upper)});
}

TimeInterval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InputError("interval must be [lower, upper]");
    }
    return {j[0].get<Step>(), step_or_inf(j[1])};
}

Json params_to_json(const PrimitiveParams& p) {
    return {{"max_speed", p.max_speed},
            {"acceleration", p.acceleration},
            {"time_step", p.time_step},
            {"rotation_steps", p.rotation_duration},
            {"wait_steps", p.wait_duration}};
}

PrimitiveParams params_from_json(const Json& j) {
    PrimitiveParams p;
    p.max_speed = j.value("max_speed", p.max_speed);
    p.acceleration = j.value("acceleration", p.acceleration);
    p.time_step = j.value("time_step", p.time_step);
    p.rotation_duration = j.value("rotation_steps", p.rotation_duration);
    p.wait_duration = j.value("wait_steps", p.wait_duration);
    return p;
}

Json primitive_set_to_json(const PrimitiveSet& set) {
    Json prims = Json::array();
    for (const MotionPrimitive& p : set.primitives()) {
        Json cells = Json::array();
        for (const SweptCell& c : p.swept_cells) {
            cells.push_back({{"offset", {c.offset.drow, c.offset.dcol}}, {"lb", c.lb}, {"ub", c.ub}});
        }
        prims.push_back({{"id", p.id},
                         {"name", p.name},
                         {"source_velocity", p.source_velocity},
                         {"target_velocity", p.target_velocity},
                         {"heading_delta", p.heading_delta},
                         {"displacement", {p.displacement.drow, p.displacement.dcol}},
                         {"duration", p.duration},
                         {"swept_cells", cells}});
    }
    Json j = {{"format_version", kFormatVersion},
              {"velocities", set.velocities()},
              {"steps_per_cell", set.steps_per_cell()},
              {"primitives", prims}};
    if (set.params()) {
        j["params"] = params_to_json(*set.params());
    }
    return j;
}

PrimitiveSet primitive_set_from_json(const Json& j) {
    check_version(j, "primitive set");
    std::vector<MotionPrimitive> prims;
    for (const Json& pj : j.at("primitives")) {
        MotionPrimitive p;
        p.id = pj.at("id").get<int>();
        p.name = pj.value("name", std::string());
        p.source_velocity = pj.at("source_velocity").get<int>();
        p.target_velocity = pj.at("target_velocity").get<int>();
        p.heading_delta = pj.value("heading_delta", 0);
        const Json& d = pj.at("displacement");
        p.displacement = {d.at(0).get<int>(), d.at(1).get<int>()};
        p.duration = pj.at("duration").get<Step>();
        for (const Json& cj : pj.at("swept_cells")) {
            const Json& o = cj.at("offset");
            p.swept_cells.push_back(
                {{o.at(0).get<int>(), o.at(1).get<int>()}, cj.at("lb").get<Step>(), cj.at("ub").get<Step>()});
        }
        prims.push_back(std::move(p));
    }
    std::optional<PrimitiveParams> params;
    if (j.contains("params")) {
        params = params_from_json(j.at("params"));
    }
    return PrimitiveSet(j.at("velocities").get<std::vector<double>>(), std::move(prims),
                        j.at("steps_per_cell").get<double>(), params);
}

Json configuration_to_json(const Configuration& c) {
    return {{"row", c.row}, {"col", c.col}, {"heading_deg", degrees(c.heading)}, {"velocity", c.velocity}};
}

Configuration configuration_from_json(const Json& j) {
    Configuration c;
    c.row = j.at("row").get<int>();
    c.col = j.at("col").get<int>();
    try {
        c.heading = heading_from_degrees(j.value("heading_deg", 0));
    } catch (const ConfigError& e) {
        throw InputError(e.what());
    }
    c.velocity = j.value("velocity", 0);
    return c;
}

Json instance_to_json(const ProblemInstance& inst) {
    Json j;
    j["format_version"] = kFormatVersion;
    if (!inst.map_path.empty()) {
        j["map_path"] = inst.map_path;
    } else {
        Json rows = Json::array();
        std::istringstream text(to_movingai(inst.map));
        std::string line;
        for (int i = 0; i < 4 && std::getline(text, line); ++i) {
        }
        while (std::getline(text, line)) {
            rows.push_back(line);
        }
        j["map"] = rows;
    }
    if (inst.primitives->params()) {
        j["primitive_params"] = params_to_json(*inst.primitives->params());
    } else {
        j["primitives"] = primitive_set_to_json(*inst.primitives);
    }
    j["agent_start"] = configuration_to_json(inst.start);
    j["start_time"] = inst.start_time;
    j["goal_cell"] = {inst.goal.row, inst.goal.col};
    if (inst.goal_mode == GoalMode::ExactConfiguration) {
        j["goal_config"] = configuration_to_json(inst.goal_config);
    }
    j["time_step"] = inst.time_step;
    Json events = Json::array();
    for (const OccupancyEvent& e : inst.events) {
        events.push_back({{"cell", {e.cell.row, e.cell.col}},
                          {"enter_s", e.enter_s},
                          {"leave_s", std::isinf(e.leave_s) ? Json(nullptr) : Json(e.leave_s)}});
    }
    j["events"] = events;
    j["seed"] = inst.seed;
    if (inst.horizon_override) {
        j["horizon"] = *inst.horizon_override;
    }
    return j;
}

ProblemInstance instance_from_json(const Json& j, const std::filesystem::path& base_dir) {
    try {
        check_version(j, "instance");
        ProblemInstance inst;
        if (j.contains("map_path")) {
            inst.map_path = j.at("map_path").get<std::string>();
            std::filesystem::path p(inst.map_path);
            if (p.is_relative() && !base_dir.empty() && std::filesystem::exists(base_dir / p)) {
                p = base_dir / p;
            }
            inst.map = load_movingai(p);
        } else if (j.contains("map")) {
            const Json& rows = j.at("map");
            std::string text = "type octile\nheight " + std::to_string(rows.size()) + "\nwidth " +
                               std::to_string(rows.empty() ? 0 : rows[0].get<std::string>().size()) +
                               "\nmap\n";
            for (const Json& r : rows) {
                text += r.get<std::string>() + "\n";
            }
            inst.map = parse_movingai(text);
        } else {
            throw InputError("instance needs map_path or map");
        }
        const double time_step = j.value("time_step", 0.1);
        if (j.contains("primitives")) {
            inst.primitives = std::make_shared<const PrimitiveSet>(primitive_set_from_json(j.at("primitives")));
        } else {
            PrimitiveParams p;
            if (j.contains("primitive_params")) {
                p = params_from_json(j.at("primitive_params"));
            } else {
                p.time_step = time_step;
            }
            inst.primitives = std::make_shared<const PrimitiveSet>(build_primitive_set(p));
        }
        inst.start = configuration_from_json(j.at("agent_start"));
        inst.start_time = j.value("start_time", Step{0});
        inst.goal = cell_from_json(j.at("goal_cell"));
        if (j.contains("goal_config")) {
            inst.goal_mode = GoalMode::ExactConfiguration;
            inst.goal_config = configuration_from_json(j.at("goal_config"));
        }
        inst.time_step = time_step;
        for (const Json& e : j.value("events", Json::array())) {
            const Json& leave = e.at("leave_s");
            inst.events.push_back({cell_from_json(e.at("cell")), e.at("enter_s").get<double>(),
                                   leave.is_null() ? std::numeric_limits<double>::infinity()
                                                   : leave.get<double>()});
        }
        inst.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("horizon")) {
            inst.horizon_override = j.at("horizon").get<Step>();
        }
        inst.finalize();
        return inst;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed instance: ") + e.what());
    } catch (const ConfigError& e) {
        throw InputError(std::string("bad primitives: ") + e.what());
    }
}

ProblemInstance load_instance(const std::filesystem::path& path) {
    return instance_from_json(read_json_file(path), path.parent_path());
}

Json trajectory_to_json(const Trajectory& t) {
    Json steps = Json::array();
    for (const TrajectoryStep& s : t.steps) {
        steps.push_back({{"primitive", s.primitive}, {"start", s.start}});
    }
    return {{"format_version", kFormatVersion},
            {"start", configuration_to_json(t.start_config)},
            {"start_time", t.start_time},
            {"steps", steps},
            {"cost", t.cost}};
}

Trajectory trajectory_from_json(const Json& j, const ProblemInstance* inst) {
    try {
        check_version(j, "trajectory");
        Trajectory t;
        if (j.contains("start")) {
            t.start_config = configuration_from_json(j.at("start"));
        } else if (inst) {
            t.start_config = inst->start;
        }
        t.start_time = j.value("start_time", inst ? inst->start_time : Step{0});
        for (const Json& s : j.at("steps")) {
            t.steps.push_back({s.at("primitive").get<int>(), s.at("start").get<Step>()});
        }
        t.cost = j.at("cost").get<Step>();
        return t;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed trajectory: ") + e.what());
    }
}

Json report_to_json(const ValidationReport& r) {
    Json v = Json::array();
    for (const Violation& x : r.violations) {
        Json e = {{"kind", violation_name(x.kind)}, {"time", x.time}, {"detail", x.detail}};
        e["cell"] = x.cell ? Json::array({x.cell->row, x.cell->col}) : Json(nullptr);
        v.push_back(e);
    }
    return {{"format_version", kFormatVersion}, {"valid", r.valid}, {"violations", v}};
}

Json outcome_to_json(const PlanOutcome& o, PlannerKind planner) {
    Json j = {{"format_version", kFormatVersion},
              {"planner", planner_name(planner)},
              {"status", status_name(o.status)},
              {"expansions", o.expansions},
              {"generations", o.generations},
              {"runtime_ms", o.runtime_s * 1000.0}};
    if (o.trajectory) {
        j["trajectory"] = trajectory_to_json(*o.trajectory);
    }
    if (!o.trace.empty()) {
        Json tr = Json::array();
        for (const TraceEntry& e : o.trace) {
            tr.push_back({{"config", configuration_to_json(e.config)},
                          {"interval", interval_to_json(e.interval)},
                          {"f", e.f}});
        }
        j["trace"] = tr;
    }
    return j;
}

std::vector<SweepLeg> ProjectionFixture::legs() const {
    std::vector<SweepLeg> out;
    for (const Cell& c : cells) {
        out.push_back({c.lb, c.ub, &c.safe});
    }
    return out;
}

Json fixture_to_json(const ProjectionFixture& f) {
    Json cells = Json::array();
    for (const auto& c : f.cells) {
        Json safe = Json::array();
        for (const TimeInterval& iv : c.safe) {
            safe.push_back(interval_to_json(iv));
        }
        cells.push_back({{"lb", c.lb}, {"ub", c.ub}, {"safe", safe}});
    }
    return {{"format_version", kFormatVersion},
            {"departure", interval_to_json(f.departure)},
            {"duration", f.duration},
            {"cells", cells}};
}

ProjectionFixture fixture_from_json(const Json& j) {
    try {
        check_version(j, "projection fixture");
        ProjectionFixture f;
        f.departure = interval_from_json(j.at("departure"));
        f.duration = j.at("duration").get<Step>();
        for (const Json& c : j.at("cells")) {
            IntervalList safe;
            for (const Json& iv : c.at("safe")) {
                safe.push_back(interval_from_json(iv));
            }
            f.cells.push_back({c.at("lb").get<Step>(), c.at("ub").get<Step>(), SafeIntervalSet(safe)});
        }
        return f;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed projection fixture: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("projection fixture: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace kinosipp
