#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kinosipp {

struct CellCoord {
    int row = 0;
    int col = 0;

    auto operator<=>(const CellCoord&) const = default;
};

// Raised by the map reader; carries the 1-based line and column of the fault
// (column 0 when the whole line is at fault).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Static occupancy grid. Immutable once built.
class GridMap {
public:
    GridMap() = default;
    GridMap(int width, int height, std::vector<std::uint8_t> traversable);

    // All cells traversable.
    static GridMap open(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t cell_count() const noexcept { return traversable_.size(); }
    std::size_t traversable_count() const noexcept;

    bool in_bounds(int row, int col) const noexcept {
        return row >= 0 && col >= 0 && row < height_ && col < width_;
    }
    bool in_bounds(CellCoord c) const noexcept { return in_bounds(c.row, c.col); }

    // Out-of-bounds cells are reported blocked.
    bool is_traversable(int row, int col) const noexcept {
        return in_bounds(row, col) && traversable_[index(row, col)] != 0;
    }
    bool is_traversable(CellCoord c) const noexcept { return is_traversable(c.row, c.col); }

    std::size_t index(int row, int col) const noexcept {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(col);
    }
    std::size_t index(CellCoord c) const noexcept { return index(c.row, c.col); }
    CellCoord coord(std::size_t idx) const noexcept {
        return {static_cast<int>(idx / static_cast<std::size_t>(width_)),
                static_cast<int>(idx % static_cast<std::size_t>(width_))};
    }

    bool operator==(const GridMap&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> traversable_;
};

GridMap parse_movingai(std::istream& in);
GridMap parse_movingai(std::string_view text);
GridMap load_movingai(const std::filesystem::path& path);

// Writes `type octile` format; blocked cells as '@', free as '.'.
std::string to_movingai(const GridMap& map);

inline bool is_traversable(const GridMap& map, int row, int col) noexcept {
    return map.is_traversable(row, col);
}

}  // namespace kinosipp
