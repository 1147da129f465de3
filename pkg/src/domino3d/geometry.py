"""Cells, cubes, parity coloring, floor plans, and two-story regions.

Coordinate conventions used throughout the project:

* A cell ``(x, y)`` is the unit square ``[x, x+1] x [y, y+1]`` of a floor
  plan; ``y`` increases downward, so "bottommost" means maximal ``y``.
* A cube ``(x, y, z)`` is the unit cube at ``(x, y, z) + [0, 1]^3``, with
  ``z = 0`` the top floor and ``z = 1`` the bottom floor.
* A cube is white iff ``x + y + z`` is even; a cell is white iff ``x + y``
  is even.  The two floors disagree: the cube above a cell (z = 0) has the
  cell's color, the cube below it (z = 1) has the opposite color.

A two-story region consists of a top and a bottom floor plan, each
nonempty, edge-connected and simply connected.  Cells present in exactly
one floor are *holes*; a hole whose cube is white is a *source* and one
whose cube is black is a *sink* (the names refer to the direction of the
ghost curves that close up the drawing of a tiling, see the invariant
module).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

WHITE = "white"
BLACK = "black"


class Cell(NamedTuple):
    x: int
    y: int


class Cube(NamedTuple):
    x: int
    y: int
    z: int


def cell_color(c: Cell | tuple[int, int]) -> str:
    """Color of a floor-plan cell: white iff x + y is even."""
    x, y = c
    return WHITE if (x + y) % 2 == 0 else BLACK


def cube_color(c: Cube | tuple[int, int, int]) -> str:
    """Color of a cube: white iff x + y + z is even."""
    x, y, z = c
    return WHITE if (x + y + z) % 2 == 0 else BLACK


class GeometryError(ValueError):
    """Base class for region-construction failures."""


class EmptyFloor(GeometryError):
    """A floor plan with no cells."""


class NotConnected(GeometryError):
    """A floor plan that is not edge-connected."""


class NotSimplyConnected(GeometryError):
    """A floor plan whose complement is disconnected (it has an interior hole)."""


def _neighbors4(c: Cell) -> list[Cell]:
    x, y = c
    return [Cell(x + 1, y), Cell(x - 1, y), Cell(x, y + 1), Cell(x, y - 1)]


@dataclass(frozen=True)
class FloorPlan:
    """A finite set of cells forming one floor of a region.

    Valid floor plans are nonempty, connected through shared edges, and
    simply connected (filling the plan leaves no enclosed empty pockets).
    """

    cells: frozenset[Cell]

    def __init__(self, cells: Iterable[Cell | tuple[int, int]]):
        object.__setattr__(self, "cells", frozenset(Cell(x, y) for x, y in cells))
        self._validate()

    def _validate(self) -> None:
        if not self.cells:
            raise EmptyFloor("floor plan has no cells")
        if not self.is_connected():
            raise NotConnected("floor plan is not edge-connected")
        if not self.is_simply_connected():
            raise NotSimplyConnected("floor plan encloses an empty pocket")

    def is_connected(self) -> bool:
        start = next(iter(self.cells))
        seen = {start}
        stack = [start]
        while stack:
            for n in _neighbors4(stack.pop()):
                if n in self.cells and n not in seen:
                    seen.add(n)
                    stack.append(n)
        return len(seen) == len(self.cells)

    def is_simply_connected(self) -> bool:
        """Flood-fill the complement inside a 1-cell-inflated bounding box;
        the plan is simply connected iff the complement is one component."""
        x0, y0, x1, y1 = self.bbox()
        x0, y0, x1, y1 = x0 - 1, y0 - 1, x1 + 1, y1 + 1
        outside = {
            Cell(x, y)
            for x in range(x0, x1 + 1)
            for y in range(y0, y1 + 1)
            if Cell(x, y) not in self.cells
        }
        if not outside:
            return True
        start = Cell(x0, y0)
        seen = {start}
        stack = [start]
        while stack:
            for n in _neighbors4(stack.pop()):
                if n in outside and n not in seen:
                    seen.add(n)
                    stack.append(n)
        return len(seen) == len(outside)

    def bbox(self) -> tuple[int, int, int, int]:
        """(min x, min y, max x, max y) over the cells."""
        xs = [c.x for c in self.cells]
        ys = [c.y for c in self.cells]
        return min(xs), min(ys), max(xs), max(ys)

    def color_count(self) -> tuple[int, int]:
        """(#white cells, #black cells)."""
        white = sum(1 for c in self.cells if cell_color(c) == WHITE)
        return white, len(self.cells) - white

    def translated(self, dx: int, dy: int) -> "FloorPlan":
        return FloorPlan(Cell(c.x + dx, c.y + dy) for c in self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))


@dataclass(frozen=True)
class TwoStoryRegion:
    """Two floor plans stacked as ``z = 0`` (top) over ``z = 1`` (bottom).

    Derived data is computed eagerly: the set of common cells, the holes
    (cells in exactly one floor, tagged with their floor), and the holes
    classified into sources (white cubes) and sinks (black cubes).

    ``cubes`` lists every cube of the region sorted by ``(z, y, x)``; this
    fixed order is the spine of tiling enumeration and serialization.
    """

    top: FloorPlan
    bottom: FloorPlan
    common: frozenset[Cell] = field(init=False)
    holes: tuple[tuple[Cell, int], ...] = field(init=False)
    sources: tuple[Cube, ...] = field(init=False)
    sinks: tuple[Cube, ...] = field(init=False)
    cubes: tuple[Cube, ...] = field(init=False)

    def __post_init__(self) -> None:
        common = self.top.cells & self.bottom.cells
        holes: list[tuple[Cell, int]] = []
        for cell in sorted(self.top.cells - self.bottom.cells):
            holes.append((cell, 0))
        for cell in sorted(self.bottom.cells - self.top.cells):
            holes.append((cell, 1))
        sources = []
        sinks = []
        for cell, z in holes:
            cube = Cube(cell.x, cell.y, z)
            (sources if cube_color(cube) == WHITE else sinks).append(cube)
        cubes = [Cube(c.x, c.y, 0) for c in sorted(self.top.cells, key=lambda c: (c.y, c.x))]
        cubes += [Cube(c.x, c.y, 1) for c in sorted(self.bottom.cells, key=lambda c: (c.y, c.x))]
        object.__setattr__(self, "common", frozenset(common))
        object.__setattr__(self, "holes", tuple(holes))
        object.__setattr__(self, "sources", tuple(sources))
        object.__setattr__(self, "sinks", tuple(sinks))
        object.__setattr__(self, "cubes", tuple(cubes))

    @property
    def is_duplex(self) -> bool:
        return self.top.cells == self.bottom.cells

    def floor(self, z: int) -> FloorPlan:
        return self.top if z == 0 else self.bottom

    def __contains__(self, cube: object) -> bool:
        if not isinstance(cube, tuple) or len(cube) != 3:
            return False
        x, y, z = cube
        return Cell(x, y) in (self.top if z == 0 else self.bottom).cells

    def cube_index(self) -> dict[Cube, int]:
        return {cube: i for i, cube in enumerate(self.cubes)}

    def translated(self, dx: int, dy: int) -> "TwoStoryRegion":
        return TwoStoryRegion(self.top.translated(dx, dy), self.bottom.translated(dx, dy))


def make_region(top: FloorPlan, bottom: FloorPlan) -> TwoStoryRegion:
    """Build a two-story region from two validated floor plans."""
    return TwoStoryRegion(top, bottom)


def duplex_region(floor: FloorPlan) -> TwoStoryRegion:
    return TwoStoryRegion(floor, floor)


def box_floor(width: int, height: int) -> FloorPlan:
    """The width x height rectangle of cells with min corner at the origin."""
    return FloorPlan(Cell(x, y) for x in range(width) for y in range(height))


def box_region(width: int, height: int) -> TwoStoryRegion:
    """The width x height x 2 box as a duplex region."""
    return duplex_region(box_floor(width, height))


def normalize_region(region: TwoStoryRegion) -> TwoStoryRegion:
    """Translate so the bounding-box min corner lands at the origin when the
    translation preserves coloring (even coordinate sum), else at (1, 0)."""
    xs = [c.x for c in region.top.cells | region.bottom.cells]
    ys = [c.y for c in region.top.cells | region.bottom.cells]
    dx, dy = -min(xs), -min(ys)
    if (dx + dy) % 2 != 0:
        dx += 1
    return region.translated(dx, dy)


# -- region file format ----------------------------------------------------
#
# UTF-8 text; one or two blocks of equal-width lines separated by a single
# blank line; '#' = cell present, '.' = absent; the first block is the top
# floor (z = 0), the second the bottom floor (z = 1); a single block is a
# duplex region.  Row r, column c maps to Cell(x=c, y=r).  Lines starting
# with ';' are comments.


def parse_region(text: str) -> TwoStoryRegion:
    """Parse the region file format described in the module docstring."""
    lines = [ln.rstrip("\n") for ln in text.splitlines()]
    lines = [ln for ln in lines if not ln.lstrip().startswith(";")]
    blocks: list[list[str]] = [[]]
    for ln in lines:
        if ln.strip() == "":
            if blocks[-1]:
                blocks.append([])
        else:
            blocks[-1].append(ln)
    blocks = [b for b in blocks if b]
    if not blocks:
        raise GeometryError("region file contains no floor blocks")
    if len(blocks) > 2:
        raise GeometryError(f"region file has {len(blocks)} blocks; expected 1 or 2")

    def block_cells(block: list[str]) -> list[Cell]:
        cells = []
        for r, row in enumerate(block):
            for c, ch in enumerate(row):
                if ch == "#":
                    cells.append(Cell(c, r))
                elif ch not in ". ":
                    raise GeometryError(f"unexpected character {ch!r} in region file")
        return cells

    top = FloorPlan(block_cells(blocks[0]))
    bottom = top if len(blocks) == 1 else FloorPlan(block_cells(blocks[1]))
    return make_region(top, bottom)


def region_to_text(region: TwoStoryRegion) -> str:
    """Serialize a region to the region file format (inverse of parse_region
    for regions with nonnegative coordinates)."""
    cells = region.top.cells | region.bottom.cells
    xs = [c.x for c in cells]
    ys = [c.y for c in cells]
    if min(xs) < 0 or min(ys) < 0:
        raise GeometryError("cannot serialize a region with negative coordinates")
    width, height = max(xs) + 1, max(ys) + 1

    def floor_text(plan: FloorPlan) -> str:
        rows = []
        for r in range(height):
            rows.append("".join("#" if Cell(c, r) in plan.cells else "." for c in range(width)))
        return "\n".join(rows)

    if region.is_duplex:
        return floor_text(region.top) + "\n"
    return floor_text(region.top) + "\n\n" + floor_text(region.bottom) + "\n"
