#include "kinosipp/grid_map.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kinosipp {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : std::string()) +
                         ": " + what),
      line_(line),
      column_(column) {}

GridMap::GridMap(int width, int height, std::vector<std::uint8_t> traversable)
    : width_(width), height_(height), traversable_(std::move(traversable)) {
    if (width <= 0 || height <= 0 ||
        traversable_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("GridMap: dimensions do not match cell table");
    }
}

GridMap GridMap::open(int width, int height) {
    return GridMap(width, height,
                   std::vector<std::uint8_t>(static_cast<std::size_t>(width) *
                                                 static_cast<std::size_t>(height),
                                             1));
}

std::size_t GridMap::traversable_count() const noexcept {
    return static_cast<std::size_t>(std::count(traversable_.begin(), traversable_.end(), 1));
}

namespace {

std::string_view rstrip(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

int parse_dimension(std::string_view line, std::string_view key, int line_no) {
    const std::string prefix = std::string(key) + " ";
    if (line.substr(0, prefix.size()) != prefix) {
        throw ParseError("expected '" + std::string(key) + " <n>'", line_no, 0);
    }
    std::string_view digits = line.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("malformed " + std::string(key) + " value", line_no,
                         static_cast<int>(prefix.size()) + 1);
    }
    long value = std::stol(std::string(digits));
    if (value <= 0 || value > 1'000'000) {
        throw ParseError(std::string(key) + " out of range", line_no,
                         static_cast<int>(prefix.size()) + 1);
    }
    return static_cast<int>(value);
}

}  // namespace

GridMap parse_movingai(std::istream& in) {
    std::string raw;
    int line_no = 0;
    auto next_line = [&](std::string_view expect) -> std::string_view {
        if (!std::getline(in, raw)) {
            throw ParseError("unexpected end of input, expected " + std::string(expect),
                             line_no + 1, 0);
        }
        ++line_no;
        return rstrip(raw);
    };

    if (next_line("header") != "type octile") {
        throw ParseError("expected 'type octile'", line_no, 0);
    }
    const int height = parse_dimension(next_line("height"), "height", line_no);
    const int width = parse_dimension(next_line("width"), "width", line_no);
    if (next_line("'map'") != "map") {
        throw ParseError("expected 'map'", line_no, 0);
    }

    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    for (int r = 0; r < height; ++r) {
        std::string_view row = next_line("map row");
        if (row.size() != static_cast<std::size_t>(width)) {
            throw ParseError("row has " + std::to_string(row.size()) + " cells, expected " +
                                 std::to_string(width),
                             line_no, 0);
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            switch (row[c]) {
                case '.':
                case 'G':
                    cells.push_back(1);
                    break;
                case '@':
                case 'O':
                case 'T':
                case 'S':
                case 'W':
                    cells.push_back(0);
                    break;
                default:
                    throw ParseError(std::string("unknown map character '") + row[c] + "'",
                                     line_no, static_cast<int>(c) + 1);
            }
        }
    }
    while (std::getline(in, raw)) {
        ++line_no;
        if (!rstrip(raw).empty()) {
            throw ParseError("extra rows after " + std::to_string(height) + " map rows", line_no,
                             0);
        }
    }
    return GridMap(width, height, std::move(cells));
}

GridMap parse_movingai(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_movingai(in);
}

GridMap load_movingai(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open map file " + path.string());
    }
    return parse_movingai(in);
}

std::string to_movingai(const GridMap& map) {
    std::string out = "type octile\nheight " + std::to_string(map.height()) + "\nwidth " +
                      std::to_string(map.width()) + "\nmap\n";
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            out.push_back(map.is_traversable(r, c) ? '.' : '@');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace kinosipp
