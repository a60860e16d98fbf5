#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>

#include "kinosipp/kinodynamics.hpp"

using namespace kinosipp;

namespace {

std::vector<SweptCell> cells_of(std::initializer_list<std::array<Step, 3>> rows) {
    std::vector<SweptCell> out;
    for (const auto& r : rows) {
        out.push_back({{0, static_cast<int>(r[0])}, r[1], r[2]});
    }
    return out;
}

// Samples the centre of a unit disk moving along +x and records, per cell k,
// the first and last sample with |x - k| < 1.
std::vector<SweptCell> simulate(const std::function<double(double)>& x_of_step, double end_steps,
                                Step duration, int cells) {
    std::vector<double> first(static_cast<std::size_t>(cells) + 1, -1.0), last(first);
    const double h = 1e-4;
    for (long i = 0;; ++i) {
        const double t = static_cast<double>(i) * h;
        if (t > static_cast<double>(duration)) {
            break;
        }
        const double x = x_of_step(std::min(t, end_steps));
        for (int k = 0; k <= cells; ++k) {
            if (std::abs(x - k) < 1.0) {
                if (first[static_cast<std::size_t>(k)] < 0) {
                    first[static_cast<std::size_t>(k)] = t;
                }
                last[static_cast<std::size_t>(k)] = t;
            }
        }
    }
    std::vector<SweptCell> out;
    for (int k = 0; k <= cells; ++k) {
        out.push_back({{0, k},
                       static_cast<Step>(std::floor(first[static_cast<std::size_t>(k)] + 1e-6)),
                       static_cast<Step>(std::ceil(last[static_cast<std::size_t>(k)] - 1e-6))});
    }
    return out;
}

}  // namespace

TEST_CASE("default primitive set") {
    const PrimitiveParams p;
    const PrimitiveSet set = build_primitive_set(p);
    REQUIRE(set.size() == 5);
    const MotionPrimitive& accel = set.at(0);
    const MotionPrimitive& decel = set.at(1);
    const MotionPrimitive& cruise = set.at(2);

    CHECK(accel.displacement == Offset{0, 4});
    CHECK(accel.duration == 40);
    CHECK(accel.swept_cells == cells_of({{0, 0, 20}, {1, 0, 29}, {2, 20, 35}, {3, 28, 40}, {4, 34, 40}}));
    CHECK(decel.duration == 40);
    CHECK(decel.swept_cells == cells_of({{0, 0, 6}, {1, 0, 12}, {2, 5, 20}, {3, 11, 40}, {4, 20, 40}}));
    CHECK(cruise.displacement == Offset{0, 1});
    CHECK(cruise.duration == 5);
    CHECK(cruise.swept_cells == cells_of({{0, 0, 5}, {1, 0, 5}}));
    for (int id : {3, 4}) {
        CHECK(set.at(id).duration == 20);
        CHECK(set.at(id).swept_cells == cells_of({{0, 0, 20}}));
    }
    CHECK(set.at(3).heading_delta == 1);
    CHECK(set.at(4).heading_delta == -1);
    CHECK(set.max_duration() == 40);
    CHECK(set.steps_per_cell() == doctest::Approx(5.0));
    CHECK(set.allows_wait(0));
    CHECK_FALSE(set.allows_wait(1));
}

TEST_CASE("sweep tables match a fine-step simulation") {
    for (auto [v, a, dt] : {std::array<double, 3>{2.0, 0.5, 0.1}, {1.0, 0.5, 1.0}, {1.0, 0.5, 0.1},
                            {2.0, 2.0, 0.1}, {3.0, 0.5, 0.1}, {2.0, 0.5, 0.05}}) {
        CAPTURE(v);
        CAPTURE(a);
        CAPTURE(dt);
        PrimitiveParams p;
        p.max_speed = v;
        p.acceleration = a;
        p.time_step = dt;
        const PrimitiveSet set = build_primitive_set(p);
        const double ramp_steps = v / (a * dt);
        const int cells = p.ramp_cells();
        auto accel_x = [&](double t) { return 0.5 * a * (t * dt) * (t * dt); };
        auto decel_x = [&](double t) { return v * t * dt - 0.5 * a * (t * dt) * (t * dt); };
        CHECK(set.at(0).swept_cells == simulate(accel_x, ramp_steps, set.at(0).duration, cells));
        CHECK(set.at(1).swept_cells == simulate(decel_x, ramp_steps, set.at(1).duration, cells));
        auto cruise_x = [&](double t) { return v * t * dt; };
        const Step w = set.at(2).duration;
        CHECK(set.at(2).swept_cells == simulate(cruise_x, static_cast<double>(w), w, 1));
    }
}

TEST_CASE("braking is the time reversal of accelerating") {
    const PrimitiveSet set = build_primitive_set({});
    const auto& acc = set.at(0).swept_cells;
    const auto& dec = set.at(1).swept_cells;
    const Step w = set.at(0).duration;
    const int n = static_cast<int>(acc.size()) - 1;
    for (int k = 0; k <= n; ++k) {
        const SweptCell& mirror = acc[static_cast<std::size_t>(n - k)];
        CHECK(dec[static_cast<std::size_t>(k)].lb == w - mirror.ub);
        CHECK(dec[static_cast<std::size_t>(k)].ub == w - mirror.lb);
    }
}

TEST_CASE("parameter validation") {
    PrimitiveParams p;
    p.acceleration = 0.6;  // 4 / 1.2 cells: not whole
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = {};
    p.max_speed = 0;
    CHECK_THROWS_AS(build_primitive_set(p), ConfigError);
    p = {};
    p.rotation_duration = 0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = {};
    p.wait_duration = 2;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    CHECK_NOTHROW(PrimitiveParams{}.validate());
}

TEST_CASE("primitive set rejects inconsistent definitions") {
    MotionPrimitive m;
    m.id = 0;
    m.source_velocity = 0;
    m.target_velocity = 0;
    m.displacement = {0, 1};
    m.duration = 2;
    m.swept_cells = {{{0, 0}, 0, 1}, {{0, 1}, 1, 2}};
    CHECK_NOTHROW(PrimitiveSet({0.0}, {m}, 1.0));
    MotionPrimitive bad = m;
    bad.id = 3;
    CHECK_THROWS_AS(PrimitiveSet({0.0}, {bad}, 1.0), ConfigError);
    bad = m;
    bad.target_velocity = 4;
    CHECK_THROWS_AS(PrimitiveSet({0.0}, {bad}, 1.0), ConfigError);
    bad = m;
    bad.swept_cells[1].ub = 5;
    CHECK_THROWS_AS(PrimitiveSet({0.0}, {bad}, 1.0), ConfigError);
    bad = m;
    bad.swept_cells = {{{0, 1}, 1, 2}, {{0, 0}, 0, 1}};
    CHECK_THROWS_AS(PrimitiveSet({0.0}, {bad}, 1.0), ConfigError);
    bad = m;
    bad.heading_delta = 2;
    CHECK_THROWS_AS(PrimitiveSet({0.0}, {bad}, 1.0), ConfigError);
}

TEST_CASE("headings") {
    CHECK(degrees(Heading::North) == 90);
    CHECK(heading_from_degrees(270) == Heading::South);
    CHECK(heading_from_degrees(-90) == Heading::South);
    CHECK_THROWS_AS(heading_from_degrees(45), ConfigError);
    CHECK(turn(Heading::East, -1) == Heading::South);
    CHECK(turn(Heading::South, 1) == Heading::East);
    CHECK(rotate(Offset{0, 1}, Heading::North) == Offset{-1, 0});
    CHECK(rotate(Offset{0, 1}, Heading::West) == Offset{0, -1});
    CHECK(rotate(Offset{0, 1}, Heading::South) == Offset{1, 0});
    for (int dr = -3; dr <= 3; ++dr) {
        for (int dc = -3; dc <= 3; ++dc) {
            const Offset o{dr, dc};
            // Quarter turns compose like headings.
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    CHECK(rotate(rotate(o, static_cast<Heading>(a)), static_cast<Heading>(b)) ==
                          rotate(o, turn(static_cast<Heading>(a), b)));
                }
            }
        }
    }
}

TEST_CASE("applicable primitives") {
    const PrimitiveSet set = build_primitive_set({});
    auto names = [&](int vel) {
        std::vector<std::string> out;
        for (const MotionPrimitive* p : applicable_primitives({3, 3, Heading::East, vel}, set)) {
            out.push_back(p->name);
        }
        return out;
    };
    CHECK(names(0) == std::vector<std::string>{"accelerate", "rotate_left", "rotate_right"});
    CHECK(names(1) == std::vector<std::string>{"decelerate", "uniform"});
    CHECK(names(2).empty());
    CHECK(names(-1).empty());
}

TEST_CASE("footprints") {
    const PrimitiveSet set = build_primitive_set({});
    const GridMap map = GridMap::open(12, 12);
    SUBCASE("accelerate east from (5,5)") {
        auto fp = primitive_footprint({5, 5, Heading::East, 0}, set.at(0), set, map);
        REQUIRE(fp);
        REQUIRE(fp->cells.size() == 5);
        for (int k = 0; k < 5; ++k) {
            CHECK(fp->cells[static_cast<std::size_t>(k)].cell == CellCoord{5, 5 + k});
            CHECK(fp->cells[static_cast<std::size_t>(k)].lb == set.at(0).swept_cells[static_cast<std::size_t>(k)].lb);
            CHECK(fp->cells[static_cast<std::size_t>(k)].ub == set.at(0).swept_cells[static_cast<std::size_t>(k)].ub);
        }
        CHECK(fp->target == Configuration{5, 9, Heading::East, 1});
        CHECK(fp->duration == 40);
    }
    SUBCASE("west is the mirror image of east") {
        for (int id : {0, 1, 2}) {
            const int vel = set.at(id).source_velocity;
            auto east = primitive_footprint({6, 6, Heading::East, vel}, set.at(id), set, map);
            auto west = primitive_footprint({6, 6, Heading::West, vel}, set.at(id), set, map);
            REQUIRE(east);
            REQUIRE(west);
            REQUIRE(east->cells.size() == west->cells.size());
            for (std::size_t i = 0; i < east->cells.size(); ++i) {
                CHECK(west->cells[i].cell == CellCoord{6, 12 - east->cells[i].cell.col});
                CHECK(west->cells[i].lb == east->cells[i].lb);
                CHECK(west->cells[i].ub == east->cells[i].ub);
            }
        }
    }
    SUBCASE("north moves toward row 0") {
        auto fp = primitive_footprint({5, 5, Heading::North, 0}, set.at(0), set, map);
        REQUIRE(fp);
        CHECK(fp->target == Configuration{1, 5, Heading::North, 1});
    }
    SUBCASE("cached and uncached footprints agree") {
        for (int h = 0; h < 4; ++h) {
            for (const MotionPrimitive& p : set.primitives()) {
                const Configuration c{6, 6, static_cast<Heading>(h), p.source_velocity};
                auto a = primitive_footprint(c, p, set, map);
                auto b = primitive_footprint(c, p, map);
                REQUIRE(a.has_value() == b.has_value());
                if (a) {
                    CHECK(a->cells == b->cells);
                    CHECK(a->target == b->target);
                }
            }
        }
    }
    SUBCASE("rotation is in place") {
        auto fp = primitive_footprint({0, 0, Heading::East, 0}, set.at(3), set, map);
        REQUIRE(fp);
        CHECK(fp->cells == std::vector<FootprintCell>{{{0, 0}, 0, 20}});
        CHECK(fp->target == Configuration{0, 0, Heading::North, 0});
    }
    SUBCASE("leaving the map or hitting a wall is infeasible") {
        CHECK_FALSE(primitive_footprint({5, 9, Heading::East, 0}, set.at(0), set, map));
        CHECK_FALSE(primitive_footprint({2, 5, Heading::North, 0}, set.at(0), set, map));
        std::vector<std::uint8_t> cells(144, 1);
        cells[5 * 12 + 7] = 0;
        const GridMap walled(12, 12, cells);
        CHECK_FALSE(primitive_footprint({5, 5, Heading::East, 0}, set.at(0), set, walled));
        CHECK(primitive_footprint({4, 5, Heading::East, 0}, set.at(0), set, walled));
    }
}
