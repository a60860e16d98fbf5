#include <doctest.h>

#include <fstream>
#include <iterator>
#include <random>

#include "kinosipp/grid_map.hpp"

using namespace kinosipp;

TEST_CASE("small map with one blocked cell") {
    const GridMap m = parse_movingai("type octile\nheight 2\nwidth 3\nmap\n.@.\n...\n");
    CHECK(m.width() == 3);
    CHECK(m.height() == 2);
    CHECK(m.traversable_count() == 5);
    CHECK_FALSE(is_traversable(m, 0, 1));
    CHECK(is_traversable(m, 0, 0));
    CHECK_FALSE(is_traversable(m, -1, 0));
    CHECK_FALSE(is_traversable(m, 2, 0));
    CHECK_FALSE(is_traversable(m, 0, 3));
}

TEST_CASE("all blocked body") {
    const GridMap m = parse_movingai("type octile\nheight 2\nwidth 2\nmap\n@@\nTO\n");
    CHECK(m.traversable_count() == 0);
}

TEST_CASE("terrain characters") {
    const GridMap m = parse_movingai("type octile\nheight 1\nwidth 7\nmap\n.G@OTSW\n");
    CHECK(m.is_traversable(0, 0));
    CHECK(m.is_traversable(0, 1));
    for (int c = 2; c < 7; ++c) {
        CHECK_FALSE(m.is_traversable(0, c));
    }
}

TEST_CASE("CRLF line endings and trailing blank lines are accepted") {
    const GridMap m = parse_movingai("type octile\r\nheight 1\r\nwidth 2\r\nmap\r\n.@\r\n\r\n");
    CHECK(m.traversable_count() == 1);
}

TEST_CASE("malformed input reports line and column") {
    SUBCASE("unknown character") {
        try {
            parse_movingai("type octile\nheight 2\nwidth 3\nmap\n...\n.x.\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 6);
            CHECK(e.column() == 2);
        }
    }
    SUBCASE("short row") {
        try {
            parse_movingai("type octile\nheight 2\nwidth 3\nmap\n...\n..\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 6);
        }
    }
    SUBCASE("missing rows") {
        CHECK_THROWS_AS(parse_movingai("type octile\nheight 3\nwidth 1\nmap\n.\n.\n"), ParseError);
    }
    SUBCASE("extra rows") {
        CHECK_THROWS_AS(parse_movingai("type octile\nheight 1\nwidth 1\nmap\n.\n.\n"), ParseError);
    }
    SUBCASE("bad header") {
        CHECK_THROWS_AS(parse_movingai("type grid\nheight 1\nwidth 1\nmap\n.\n"), ParseError);
        CHECK_THROWS_AS(parse_movingai("type octile\nheight x\nwidth 1\nmap\n.\n"), ParseError);
        CHECK_THROWS_AS(parse_movingai("type octile\nwidth 1\nheight 1\nmap\n.\n"), ParseError);
        CHECK_THROWS_AS(parse_movingai("type octile\nheight 0\nwidth 1\nmap\n"), ParseError);
    }
}

TEST_CASE("write and read back") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 12);
        const int h = 1 + static_cast<int>(rng() % 12);
        std::vector<std::uint8_t> cells(static_cast<std::size_t>(w * h));
        for (auto& c : cells) {
            c = rng() % 3 ? 1 : 0;
        }
        const GridMap m(w, h, cells);
        CHECK(parse_movingai(to_movingai(m)) == m);
    }
}

TEST_CASE("bundled maps") {
    auto count_free = [](const char* path) {
        std::ifstream in(path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        // Skip the four header lines, then count '.' directly.
        std::size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            pos = text.find('\n', pos) + 1;
        }
        return static_cast<std::size_t>(std::count(text.begin() + static_cast<long>(pos), text.end(), '.'));
    };
    const GridMap empty = load_movingai(KINOSIPP_DATA_DIR "/maps/empty-64-64.map");
    CHECK(empty.width() == 64);
    CHECK(empty.height() == 64);
    CHECK(empty.traversable_count() == 4096);

    const GridMap room = load_movingai(KINOSIPP_DATA_DIR "/maps/room-64-64-8.map");
    CHECK(room.width() == 64);
    CHECK(room.traversable_count() == count_free(KINOSIPP_DATA_DIR "/maps/room-64-64-8.map"));
    CHECK(room.is_traversable(0, 0));
    CHECK(room.is_traversable(63, 63));

    CHECK_THROWS(load_movingai("/nonexistent/x.map"));
}

TEST_CASE("index and coord are inverse") {
    const GridMap m = GridMap::open(7, 5);
    for (std::size_t i = 0; i < m.cell_count(); ++i) {
        CHECK(m.index(m.coord(i)) == i);
    }
    CHECK(m.coord(8) == CellCoord{1, 1});
}
