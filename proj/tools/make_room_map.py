#!/usr/bin/env python3
"""Writes a 64x64 map of 7x7 rooms separated by one-cell walls. Every wall
segment between neighbouring rooms gets one doorway of random width and
position (seeded). Seed 10 is the first whose bottom-right corner can be
reached at rest from the top-left one under the default primitives."""
import random
import sys

SIZE, ROOM = 64, 8
MAX_DOOR = 4


def doorway(rng, length):
    width = rng.randint(1, MAX_DOOR)
    start = rng.randrange(length - width + 1)
    return range(start, start + width)


def main(path, seed=10):
    rng = random.Random(seed)
    grid = [["." for _ in range(SIZE)] for _ in range(SIZE)]
    for i in range(SIZE):
        for k in range(ROOM - 1, SIZE - 1, ROOM):
            grid[i][k] = "@"
            grid[k][i] = "@"
    rooms = SIZE // ROOM
    for r in range(rooms):
        for c in range(rooms):
            top, left = r * ROOM, c * ROOM
            # The last row and column of rooms reach the map edge.
            height = SIZE - top if r + 1 == rooms else ROOM - 1
            width = SIZE - left if c + 1 == rooms else ROOM - 1
            if c + 1 < rooms:  # vertical wall to the east
                for i in doorway(rng, height):
                    grid[top + i][left + ROOM - 1] = "."
            if r + 1 < rooms:  # horizontal wall to the south
                for i in doorway(rng, width):
                    grid[top + ROOM - 1][left + i] = "."
    with open(path, "w", newline="\n") as f:
        f.write(f"type octile\nheight {SIZE}\nwidth {SIZE}\nmap\n")
        for row in grid:
            f.write("".join(row) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "room-64-64-8.map")
