#include <doctest.h>

#include <random>

#include "kinosipp/intervals.hpp"

using namespace kinosipp;

namespace {

// Brute-force membership over [0, n).
std::vector<bool> members(const IntervalList& l, Step n) {
    std::vector<bool> out(static_cast<std::size_t>(n), false);
    for (const TimeInterval& iv : l) {
        for (Step t = iv.lower; t < n && (is_infinite(iv.upper) || t <= iv.upper); ++t) {
            out[static_cast<std::size_t>(t)] = true;
        }
    }
    return out;
}

IntervalList random_list(std::mt19937_64& rng, int count, Step span) {
    IntervalList l;
    for (int i = 0; i < count; ++i) {
        const Step a = static_cast<Step>(rng() % static_cast<std::uint64_t>(span));
        const Step len = static_cast<Step>(rng() % 8);
        l.push_back({a, rng() % 10 == 0 ? kInfinity : a + len});
    }
    return l;
}

}  // namespace

TEST_CASE("blocked intervals from events") {
    const CellCoord a{0, 0};
    SUBCASE("floor/ceil") {
        const std::vector<OccupancyEvent> ev{{a, 3.2, 5.7}};
        CHECK(blocked_from_events(ev, 1.0).at(a) == IntervalList{{3, 6}});
    }
    SUBCASE("touching events merge") {
        const std::vector<OccupancyEvent> ev{{a, 1, 2}, {a, 2, 4}};
        CHECK(blocked_from_events(ev, 1.0).at(a) == IntervalList{{1, 4}});
    }
    SUBCASE("point touch") {
        const std::vector<OccupancyEvent> ev{{a, 0.0, 0.0}};
        CHECK(blocked_from_events(ev, 1.0).at(a) == IntervalList{{0, 0}});
    }
    SUBCASE("decimal seconds land on exact steps") {
        const std::vector<OccupancyEvent> ev{{a, 0.3, 0.7}};
        CHECK(blocked_from_events(ev, 0.1).at(a) == IntervalList{{3, 7}});
    }
    SUBCASE("parked obstacle") {
        const std::vector<OccupancyEvent> ev{{a, 2.0, std::numeric_limits<double>::infinity()}};
        CHECK(blocked_from_events(ev, 1.0).at(a) == IntervalList{{2, kInfinity}});
    }
    SUBCASE("bad events") {
        CHECK_THROWS_AS(blocked_from_events(std::vector<OccupancyEvent>{{a, -1, 2}}, 1.0), InputError);
        CHECK_THROWS_AS(blocked_from_events(std::vector<OccupancyEvent>{{a, 3, 2}}, 1.0), InputError);
        CHECK_THROWS_AS(blocked_from_events(std::vector<OccupancyEvent>{{a, 0, 1}}, 0.0), InputError);
    }
}

TEST_CASE("floor and ceil steps") {
    CHECK(floor_steps(0.3, 0.1) == 3);
    CHECK(ceil_steps(0.3, 0.1) == 3);
    CHECK(floor_steps(0.35, 0.1) == 3);
    CHECK(ceil_steps(0.35, 0.1) == 4);
    CHECK(ceil_steps(113.6, 0.1) == 1136);
}

TEST_CASE("invert to safe") {
    CHECK(invert_to_safe({{3, 6}}, false).intervals() == IntervalList{{0, 2}, {7, kInfinity}});
    CHECK(invert_to_safe({}, false).intervals() == IntervalList{{0, kInfinity}});
    CHECK(invert_to_safe({{0, 4}}, false).intervals() == IntervalList{{5, kInfinity}});
    CHECK(invert_to_safe({}, true).empty());
    CHECK(invert_to_safe({{2, kInfinity}}, false).intervals() == IntervalList{{0, 1}});
}

TEST_CASE("safe interval lookup") {
    const SafeIntervalSet s({{0, 2}, {7, kInfinity}});
    CHECK(safe_interval_containing(s, 8) == TimeInterval{7, kInfinity});
    CHECK_FALSE(safe_interval_containing(s, 5).has_value());
    CHECK(safe_interval_containing(s, 2) == TimeInterval{0, 2});
    CHECK(s.is_safe_during(0, 2));
    CHECK_FALSE(s.is_safe_during(1, 7));
    CHECK(s.is_safe_during(9, 1'000'000));
    CHECK(s.index_of(7) == 1u);
}

TEST_CASE("safe set rejects malformed input") {
    CHECK_THROWS(SafeIntervalSet({{0, 3}, {4, 6}}));  // touching
    CHECK_THROWS(SafeIntervalSet({{5, 6}, {0, 2}}));  // unsorted
    CHECK_THROWS(SafeIntervalSet({{3, 2}}));
    CHECK_NOTHROW(SafeIntervalSet({{0, 3}, {5, 6}}));
}

TEST_CASE("canonicalize and complement partition the timeline") {
    std::mt19937_64 rng(11);
    const Step span = 120;
    for (int trial = 0; trial < 500; ++trial) {
        const IntervalList raw = random_list(rng, static_cast<int>(rng() % 6), 100);
        const IntervalList canon = canonicalize(raw);
        const IntervalList comp = complement(canon);
        CHECK(members(canon, span) == members(raw, span));
        const auto in = members(canon, span);
        const auto out = members(comp, span);
        for (Step t = 0; t < span; ++t) {
            CHECK(in[static_cast<std::size_t>(t)] != out[static_cast<std::size_t>(t)]);
        }
        // Canonical form: sorted, separated by at least one step.
        for (std::size_t i = 1; i < canon.size(); ++i) {
            CHECK(canon[i].lower > canon[i - 1].upper + 1);
        }
        CHECK(canonicalize(complement(comp)) == canon);
        CHECK_NOTHROW(SafeIntervalSet{comp});
    }
}

TEST_CASE("safe table") {
    const GridMap map(3, 1, {1, 0, 1});
    BlockedTable blocked;
    blocked[{0, 2}] = {{4, 9}};
    blocked[{0, 1}] = {{100, 200}};  // static cell: ignored for the last step
    const SafeTable table(map, blocked);
    CHECK(table.at(0, 0) == SafeIntervalSet::always_safe());
    CHECK(table.at(0, 1).empty());
    CHECK(table.at(0, 2).intervals() == IntervalList{{0, 3}, {10, kInfinity}});
    CHECK(table.last_blocked_step() == 9);

    blocked[{0, 0}] = {{20, kInfinity}};
    CHECK(SafeTable(map, blocked).last_blocked_step() == 20);
    CHECK(SafeTable(map, {}).last_blocked_step() == -1);
}

TEST_CASE("shift saturates on infinity") {
    CHECK(shift(kInfinity, 5) == kInfinity);
    CHECK(shift(kInfinity, -5) == kInfinity);
    CHECK(shift(10, -3) == 7);
}
