#include <doctest.h>

#include "kinosipp/io.hpp"
#include "kinosipp/validation.hpp"

using namespace kinosipp;

namespace {

ProblemInstance line_instance() {
    return load_instance(KINOSIPP_DATA_DIR "/fixtures/line_instance.json");
}

// accelerate = 0, decelerate = 1, uniform = 2 in the fixture.
Trajectory line_plan(Step shift = 0) {
    Trajectory t;
    t.start_config = {0, 0, Heading::East, 0};
    t.steps = {{0, 2 + shift}, {2, 4 + shift}, {1, 5 + shift}};
    t.cost = 7 + shift;
    return t;
}

}  // namespace

TEST_CASE("known-good plan") {
    const ProblemInstance inst = line_instance();
    const ValidationReport r = validate(line_plan(), inst);
    CHECK(r.valid);
    CHECK(r.violations.empty());
}

TEST_CASE("leaving two steps early hits the obstacle in the third cell") {
    const ProblemInstance inst = line_instance();
    const ValidationReport r = validate(line_plan(-2), inst);
    CHECK_FALSE(r.valid);
    REQUIRE(r.has(ViolationKind::DynamicCollision));
    bool seen = false;
    for (const Violation& v : r.violations) {
        if (v.kind == ViolationKind::DynamicCollision && v.cell == CellCoord{0, 2}) {
            CHECK(v.time == 3);
            seen = true;
        }
    }
    CHECK(seen);
}

TEST_CASE("late departure runs into the obstacle parked at the start") {
    const ProblemInstance inst = line_instance();
    Trajectory t = line_plan();
    // Waiting at A until 6 overlaps the block starting there at 6.
    t.steps = {{0, 6}, {2, 8}, {1, 9}};
    t.cost = 11;
    const ValidationReport r = validate(t, inst);
    CHECK(r.has(ViolationKind::DynamicCollision));
}

TEST_CASE("waiting while moving") {
    const ProblemInstance inst = line_instance();
    Trajectory t = line_plan();
    t.steps = {{0, 2}, {2, 5}, {1, 6}};
    t.cost = 8;
    const ValidationReport r = validate(t, inst);
    CHECK(r.has(ViolationKind::IllegalWait));
}

TEST_CASE("cost mismatch") {
    const ProblemInstance inst = line_instance();
    Trajectory t = line_plan();
    t.cost = 8;
    const ValidationReport r = validate(t, inst);
    CHECK(r.has(ViolationKind::BadCost));
    CHECK_FALSE(r.has(ViolationKind::DynamicCollision));
}

TEST_CASE("broken chains") {
    const ProblemInstance inst = line_instance();
    Trajectory t = line_plan();
    t.steps[0].primitive = 1;  // decelerate from rest
    CHECK(validate(t, inst).has(ViolationKind::ChainBreak));

    t = line_plan();
    t.steps[1].start = 3;  // before the previous step arrives
    CHECK(validate(t, inst).has(ViolationKind::ChainBreak));

    t = line_plan();
    t.steps[0].primitive = 42;
    CHECK(validate(t, inst).has(ViolationKind::ChainBreak));

    t = line_plan();
    t.start_config.col = 1;
    CHECK(validate(t, inst).has(ViolationKind::ChainBreak));

    t = line_plan();
    t.start_time = 1;
    CHECK(validate(t, inst).has(ViolationKind::ChainBreak));
}

TEST_CASE("walls and edges") {
    ProblemInstance inst;
    inst.map = parse_movingai("type octile\nheight 1\nwidth 10\nmap\n..@.......\n");
    inst.primitives = std::make_shared<const PrimitiveSet>(build_primitive_set({}));
    inst.start = {0, 0, Heading::East, 0};
    inst.goal = {0, 9};
    inst.finalize();
    Trajectory t;
    t.start_config = inst.start;
    t.steps = {{inst.primitives->at(0).id, 0}};
    const MotionPrimitive& first = inst.primitives->at(0);
    REQUIRE(first.displacement.dcol == 4);
    t.cost = first.duration;
    CHECK(validate(t, inst).has(ViolationKind::StaticCollision));

    // Same move facing west leaves the map.
    t.start_config.heading = Heading::West;
    CHECK(validate(t, inst).has(ViolationKind::StaticCollision));
}

TEST_CASE("replay does not trust the derived safe tables") {
    ProblemInstance inst = line_instance();
    inst.safe = SafeTable(inst.map, {});
    CHECK(validate(line_plan(-2), inst).has(ViolationKind::DynamicCollision));
}

TEST_CASE("violation names") {
    CHECK(violation_name(ViolationKind::IllegalWait) == "illegal_wait");
    CHECK(violation_name(ViolationKind::DynamicCollision) == "dynamic_collision");
}
