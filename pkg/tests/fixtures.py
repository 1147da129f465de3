"""Hand-built tilings and regions shared across test modules.

The expected values asserted against these fixtures were derived by hand
(edge orientations followed cube colors, windings counted on paper) before
the library computed them.
"""

from __future__ import annotations

from domino3d.geometry import Cell, Cube, FloorPlan, box_floor, box_region, make_region
from domino3d.tiling import Dimer, Tiling


def windmill(mirrored: bool = False) -> Tiling:
    """A 3x3 duplex tiling whose eight horizontal dimers chain into one
    cycle around a single center jewel (winding -1; +1 when mirrored)."""
    region = box_region(3, 3)
    ring_top = [
        (Cube(0, 0, 0), Cube(1, 0, 0)),
        (Cube(2, 0, 0), Cube(2, 1, 0)),
        (Cube(2, 2, 0), Cube(1, 2, 0)),
        (Cube(0, 2, 0), Cube(0, 1, 0)),
    ]
    ring_bottom = [
        (Cube(1, 0, 1), Cube(2, 0, 1)),
        (Cube(2, 1, 1), Cube(2, 2, 1)),
        (Cube(1, 2, 1), Cube(0, 2, 1)),
        (Cube(0, 1, 1), Cube(0, 0, 1)),
    ]
    if mirrored:
        flip = lambda c: Cube(c.x, c.y, 1 - c.z)
        ring_top = [(flip(a), flip(b)) for a, b in ring_top]
        ring_bottom = [(flip(a), flip(b)) for a, b in ring_bottom]
    dimers = [Dimer(a, b) for a, b in ring_top + ring_bottom]
    dimers.append(Dimer(Cube(1, 1, 0), Cube(1, 1, 1)))
    return Tiling.from_dimers(region, dimers)


def offset_region():
    """Unequal floors: the bottom floor loses (2,2) and gains (3,1), giving
    one source hole at (2,2) and one sink hole at (3,1)."""
    top = box_floor(3, 3)
    bottom = FloorPlan(list(box_floor(3, 3).cells - {Cell(2, 2)}) + [Cell(3, 1)])
    return make_region(top, bottom)


def offset_tiling(region) -> Tiling:
    """Seven jewels plus one horizontal dimer per floor through the holes."""
    dimers = [
        Dimer(Cube(x, y, 0), Cube(x, y, 1))
        for x, y in [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2), (1, 2)]
    ]
    dimers.append(Dimer(Cube(2, 1, 0), Cube(2, 2, 0)))
    dimers.append(Dimer(Cube(2, 1, 1), Cube(3, 1, 1)))
    return Tiling.from_dimers(region, dimers)


LONG_WAY = [
    (2, 2), (2, 3), (1, 3), (0, 3), (-1, 3), (-1, 2), (-1, 1), (-1, 0),
    (-1, -1), (0, -1), (1, -1), (2, -1), (3, -1), (4, -1), (4, 0), (4, 1),
    (3, 1),
]
