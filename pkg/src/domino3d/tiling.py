"""Dimers, tilings, validation, exhaustive enumeration, and box embedding.

A tiling is stored as a partner map: ``partner[i] = j`` when the cubes at
positions ``i`` and ``j`` of the region's fixed ``(z, y, x)`` cube order
form a dimer.  The map is kept as ``bytes`` (regions are capped at 255
cubes), which doubles as the canonical hashable serialization used by the
flip-graph search.

Enumeration repeatedly covers the lexicographically smallest uncovered cube
(in ``(z, y, x)`` order), branching over its still-free partners in the
fixed axis order +x, +y, +z.  This makes the emitted order, and therefore
every downstream table, deterministic.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .geometry import Cube, TwoStoryRegion

AXES = ("x", "y", "z")


@dataclass(frozen=True)
class Dimer:
    """Two face-adjacent cubes, stored with a < b lexicographically."""

    a: Cube
    b: Cube

    def __post_init__(self) -> None:
        if self.b < self.a:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)
        dx = self.b.x - self.a.x
        dy = self.b.y - self.a.y
        dz = self.b.z - self.a.z
        if sorted((abs(dx), abs(dy), abs(dz))) != [0, 0, 1]:
            raise ValueError(f"cubes {self.a} and {self.b} do not share a face")

    @property
    def axis(self) -> str:
        if self.a.x != self.b.x:
            return "x"
        if self.a.y != self.b.y:
            return "y"
        return "z"

    @property
    def is_vertical(self) -> bool:
        return self.axis == "z"


class Tiling:
    """A set of disjoint dimers exactly covering a two-story region."""

    __slots__ = ("region", "partners")

    def __init__(self, region: TwoStoryRegion, partners: bytes):
        self.region = region
        self.partners = partners

    @classmethod
    def from_dimers(cls, region: TwoStoryRegion, dimers: Iterable[Dimer]) -> "Tiling":
        index = region.cube_index()
        partners = bytearray(len(region.cubes))
        seen = [False] * len(region.cubes)
        for d in dimers:
            ia, ib = index[d.a], index[d.b]
            if seen[ia] or seen[ib]:
                raise ValueError(f"overlapping dimers at {d}")
            seen[ia] = seen[ib] = True
            partners[ia], partners[ib] = ib, ia
        if not all(seen):
            missing = region.cubes[seen.index(False)]
            raise ValueError(f"cube {missing} left uncovered")
        return cls(region, bytes(partners))

    @property
    def dimers(self) -> list[Dimer]:
        cubes = self.region.cubes
        out = []
        for i, j in enumerate(self.partners):
            if i < j:
                out.append(Dimer(cubes[i], cubes[j]))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.partners == other.partners and self.region.cubes == other.region.cubes

    def __hash__(self) -> int:
        return hash(self.partners)

    def __repr__(self) -> str:
        return f"Tiling({len(self.partners) // 2} dimers)"

    def to_json(self) -> dict:
        """``{"dimers": [[[x,y,z],[x,y,z]], ...]}`` with sorted coordinates."""
        return {
            "dimers": sorted(
                [list(d.a), list(d.b)] for d in self.dimers
            )
        }

    @classmethod
    def from_json(cls, region: TwoStoryRegion, data: dict) -> "Tiling":
        dimers = [Dimer(Cube(*a), Cube(*b)) for a, b in data["dimers"]]
        return cls.from_dimers(region, dimers)


@dataclass(frozen=True)
class Violation:
    """A structured tiling-validation failure; ``kind`` names the first
    problem found and ``cube`` the offending cube."""

    kind: str  # "UncoveredCube" | "OverlapAt" | "NotAdjacent" | "OutsideRegion"
    cube: Cube

    def __str__(self) -> str:
        return f"{self.kind} at {tuple(self.cube)}"


def validate(tiling: Tiling, region: TwoStoryRegion) -> Violation | None:
    """Check the tiling invariants against a region; None means valid."""
    n = len(region.cubes)
    if len(tiling.partners) != n:
        return Violation("UncoveredCube", region.cubes[min(n - 1, len(tiling.partners))])
    for i in range(n):
        j = tiling.partners[i]
        if j >= n:
            return Violation("OutsideRegion", region.cubes[i])
        if j == i or tiling.partners[j] != i:
            return Violation("OverlapAt", region.cubes[min(i, j)])
        a, b = region.cubes[i], region.cubes[j]
        if abs(a.x - b.x) + abs(a.y - b.y) + abs(a.z - b.z) != 1:
            return Violation("NotAdjacent", min(a, b))
    return None


def validate_dimer_set(region: TwoStoryRegion, dimers: Sequence[Dimer]) -> Violation | None:
    """Validate a raw dimer list (reports overlaps/uncovered cubes)."""
    index = region.cube_index()
    seen: set[int] = set()
    for d in dimers:
        for cube in (d.a, d.b):
            if cube not in index:
                return Violation("OutsideRegion", cube)
            i = index[cube]
            if i in seen:
                return Violation("OverlapAt", cube)
            seen.add(i)
    if len(seen) != len(region.cubes):
        for i, cube in enumerate(region.cubes):
            if i not in seen:
                return Violation("UncoveredCube", cube)
    return None


# -- adjacency spine -------------------------------------------------------


def _partner_table(region: TwoStoryRegion) -> list[tuple[int, ...]]:
    """For each cube index, the indices of its +x, +y, +z neighbors that lie
    in the region (enumeration branch order)."""
    index = region.cube_index()
    table = []
    for cube in region.cubes:
        x, y, z = cube
        nbrs = []
        for nbr in (Cube(x + 1, y, z), Cube(x, y + 1, z), Cube(x, y, z + 1)):
            j = index.get(nbr)
            if j is not None:
                nbrs.append(j)
        table.append(tuple(nbrs))
    return table


def _check_size(region: TwoStoryRegion) -> int:
    n = len(region.cubes)
    if n > 255:
        raise ValueError(f"region has {n} cubes; the partner-map format caps at 255")
    return n


# -- enumeration -----------------------------------------------------------


def enumerate_tilings(
    region: TwoStoryRegion, prefix: Sequence[int] = (), limit: int | None = None
) -> Iterator[Tiling]:
    """Yield every tiling exactly once, deterministically.

    ``prefix`` restricts the stream to one branch of the search tree: its
    entries are the branch choices (indices into the partner list of the
    cube being covered) taken at the first ``len(prefix)`` decisions, as
    produced by :func:`enumeration_prefixes`.
    """
    n = _check_size(region)
    if n % 2:
        return
    table = _partner_table(region)
    partners = bytearray(255 for _ in range(n))
    covered = 0  # bitmask
    emitted = 0

    def options_for(i: int, depth: int) -> list[int]:
        opts = [j for j in table[i] if not covered >> j & 1]
        if depth < len(prefix):
            p = prefix[depth]
            return [opts[p]] if p < len(opts) else []
        return opts

    # frames: [cube_index, options, next_position, placed_partner_or_-1];
    # a frame's covered/partners state is identical every time it is on top
    # with placed == -1, so its options list stays valid throughout.
    stack: list[list] = [[0, options_for(0, 0), 0, -1]]
    while stack:
        frame = stack[-1]
        i = frame[0]
        placed = frame[3]
        if placed >= 0:
            covered &= ~(1 << i | 1 << placed)
            partners[i] = partners[placed] = 255
            frame[3] = -1
        opts = frame[1]
        pos = frame[2]
        if pos >= len(opts):
            stack.pop()
            continue
        j = opts[pos]
        frame[2] = pos + 1
        covered |= 1 << i | 1 << j
        partners[i] = j
        partners[j] = i
        frame[3] = j
        k = i + 1
        while k < n and covered >> k & 1:
            k += 1
        if k >= n:
            yield Tiling(region, bytes(partners))
            emitted += 1
            if limit is not None and emitted >= limit:
                return
            continue  # revisit this frame: undo, then try the next branch
        stack.append([k, options_for(k, len(stack)), 0, -1])


def enumeration_prefixes(region: TwoStoryRegion, depth: int) -> list[tuple[int, ...]]:
    """The branch prefixes of length <= depth that partition the enumeration:
    each returned prefix selects a disjoint, nonempty-or-cheap slice of the
    search tree, and together they cover it exactly."""
    n = _check_size(region)
    table = _partner_table(region)

    prefixes: list[tuple[int, ...]] = []

    def walk(partners: dict[int, int], covered: int, prefix: tuple[int, ...]) -> None:
        if len(prefix) >= depth:
            prefixes.append(prefix)
            return
        i = 0
        while i < n and covered >> i & 1:
            i += 1
        if i >= n:
            prefixes.append(prefix)
            return
        options = [j for j in table[i] if not covered >> j & 1]
        for pos, j in enumerate(options):
            walk(partners, covered | 1 << i | 1 << j, prefix + (pos,))

    walk({}, 0, ())
    return prefixes


# -- counting --------------------------------------------------------------


def _count_from(table: list[tuple[int, ...]], n: int, covered: int, start: int,
                memo: dict[tuple[int, int], int]) -> int:
    """Memoized count of completions.  State: (first uncovered index, the
    covered bitmask restricted to indices >= that point)."""
    i = start
    while i < n and covered >> i & 1:
        i += 1
    if i >= n:
        return 1
    key = (i, covered >> i)
    hit = memo.get(key)
    if hit is not None:
        return hit
    total = 0
    for j in table[i]:
        if not covered >> j & 1:
            total += _count_from(table, n, covered | 1 << i | 1 << j, i + 1, memo)
    memo[key] = total
    return total


def _count_worker(args: tuple) -> int:
    table, n, covered, start = args
    import sys

    sys.setrecursionlimit(10000)
    return _count_from(table, n, covered, start, {})


def thread_cap() -> int:
    """Worker-count cap from the DOMINO3D_THREADS environment variable."""
    raw = os.environ.get("DOMINO3D_THREADS", "").strip()
    if raw.isdigit() and int(raw) > 0:
        return int(raw)
    return 1


def count_tilings(region: TwoStoryRegion, threads: int | None = None) -> int:
    """Exact tiling count via memoized frontier dynamic programming.

    ``threads`` > 1 (default: the DOMINO3D_THREADS cap) splits the count
    over deterministic branch prefixes in separate processes.
    """
    import sys

    n = _check_size(region)
    if n % 2:
        return 0
    table = _partner_table(region)
    workers = thread_cap() if threads is None else max(1, threads)
    if workers == 1:
        sys.setrecursionlimit(10000)
        return _count_from(table, n, 0, 0, {})

    jobs = []
    for prefix in enumeration_prefixes(region, depth=3):
        covered = 0
        i = 0
        ok = True
        for pos in prefix:
            while i < n and covered >> i & 1:
                i += 1
            options = [j for j in table[i] if not covered >> j & 1]
            if pos >= len(options):
                ok = False
                break
            covered |= 1 << i | 1 << options[pos]
        if ok:
            jobs.append((table, n, covered, 0))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_worker, jobs))


# -- box embedding ---------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """A tiling carried into a surrounding two-floored box; the complement
    is filled with vertical dimers."""

    box: TwoStoryRegion
    tiling: Tiling


class DoesNotFit(ValueError):
    pass


def embed_in_box(
    tiling: Tiling, width: int, height: int, offset: tuple[int, int] = (0, 0)
) -> Embedding:
    """Translate the tiling by ``offset`` into the width x height x 2 box at
    the origin and fill every remaining cell with a vertical dimer.

    ``offset`` must have even coordinate sum so cube colors are preserved.
    """
    from .geometry import Cell, box_region

    dx, dy = offset
    if (dx + dy) % 2:
        raise ValueError("offset must have an even coordinate sum")
    box = box_region(width, height)
    region = tiling.region
    cells = {Cell(c.x + dx, c.y + dy) for c in region.top.cells | region.bottom.cells}
    if not all(0 <= c.x < width and 0 <= c.y < height for c in cells):
        raise DoesNotFit(
            f"region does not fit in {width}x{height} box at offset {offset}"
        )
    dimers = [
        Dimer(
            Cube(d.a.x + dx, d.a.y + dy, d.a.z),
            Cube(d.b.x + dx, d.b.y + dy, d.b.z),
        )
        for d in tiling.dimers
    ]
    for x in range(width):
        for y in range(height):
            if Cell(x, y) not in cells:
                dimers.append(Dimer(Cube(x, y, 0), Cube(x, y, 1)))
    return Embedding(box, Tiling.from_dimers(box, dimers))


def all_jewels_tiling(region: TwoStoryRegion) -> Tiling:
    """The all-vertical tiling of a duplex region."""
    if not region.is_duplex:
        raise ValueError("the all-vertical tiling needs a duplex region")
    return Tiling.from_dimers(
        region,
        [Dimer(Cube(c.x, c.y, 0), Cube(c.x, c.y, 1)) for c in region.top.cells],
    )


# -- JSON helpers ----------------------------------------------------------


def tiling_to_json_text(tiling: Tiling) -> str:
    return json.dumps(tiling.to_json(), separators=(",", ":"))


def tiling_from_json_text(region: TwoStoryRegion, text: str) -> Tiling:
    return Tiling.from_json(region, json.loads(text))
