"""Planar drawings of tilings, winding numbers, and the Laurent invariant.

A tiling of a two-story region projects onto a single floor plan:

* every vertical dimer becomes a *jewel*, marked at its cell and colored by
  the cell color;
* every horizontal dimer becomes a directed edge between the two cell
  centers, oriented from its black cube to its white cube.

Each non-jewel cell shared by both floors then has exactly one incoming and
one outgoing edge, so the edges decompose into closed cycles plus open paths
that start and end at *holes* (cells present in only one floor).  Paths
start at black-cube holes (sinks) and end at white-cube holes (sources);
*ghost* curves routed from sources to sinks close every path into a cycle.

The invariant of the tiling is the Laurent polynomial

    sum over black jewels of q^k  -  sum over white jewels of q^k,

where k is the total winding number of all cycles around the jewel's cell
center, and the *twist* is the derivative of that polynomial at q = 1.
Different ghost routings change the invariant only by a global power of q.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .geometry import BLACK, WHITE, Cell, TwoStoryRegion, cell_color, cube_color
from .polynomial import LaurentPoly
from .tiling import Tiling


class InconsistentGhosts(ValueError):
    """Ghost connections that do not match the region's sources and sinks."""


class NoRoute(ValueError):
    """No admissible ghost route exists between a source/sink pair."""


class PointOnCurve(ValueError):
    """The winding number is undefined: the point lies on the curve."""


# -- winding numbers -------------------------------------------------------


def winding_number_doubled(
    vertices: Sequence[tuple[int, int]], px: int, py: int
) -> int:
    """Winding number of the closed polyline around (px, py), all coordinates
    in doubled (half-unit) integer form so the arithmetic stays exact.

    Convention: the unit square traversed (0,0) -> (1,0) -> (1,1) -> (0,1)
    has winding +1 around its interior (y grows downward on screen).
    Raises PointOnCurve if the point sits exactly on the polyline.
    """
    total = 0
    m = len(vertices)
    for i in range(m):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % m]
        if (x1, y1) == (px, py):
            raise PointOnCurve(f"({px}, {py}) lies on the curve")
        if y1 == y2:
            if y1 == py and min(x1, x2) <= px <= max(x1, x2):
                raise PointOnCurve(f"({px}, {py}) lies on the curve")
            continue
        # cross = (B - A) x (P - A); sign says which side of AB the point is on
        cross = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
        if y1 <= py < y2:  # segment heading in +y, half-open at the far end
            if cross == 0:
                raise PointOnCurve(f"({px}, {py}) lies on the curve")
            if cross > 0:
                total += 1
        elif y2 <= py < y1:
            if cross == 0:
                raise PointOnCurve(f"({px}, {py}) lies on the curve")
            if cross < 0:
                total -= 1
    return total


def winding_number(
    curve: Sequence[tuple[int, int] | Cell], point: tuple[float, float]
) -> int:
    """Winding number of a closed cell-coordinate polyline around a point.

    ``point`` may have half-integer coordinates (cell corners and edge
    midpoints); anything finer is rejected.
    """
    verts = [(2 * int(x), 2 * int(y)) for x, y in curve]
    px2, py2 = 2 * point[0], 2 * point[1]
    if px2 != int(px2) or py2 != int(py2):
        raise ValueError("point coordinates must be multiples of 1/2")
    return winding_number_doubled(verts, int(px2), int(py2))


# -- drawings --------------------------------------------------------------


@dataclass(frozen=True)
class DrawnEdge:
    """A projected horizontal dimer: a directed edge between cell centers.

    ``floor`` records which floor the dimer lives on (0 = top, 1 = bottom);
    the direction always runs from the black cube to the white cube.
    """

    src: Cell
    dst: Cell
    floor: int


@dataclass(frozen=True)
class GhostRoute:
    """A ghost curve from a source hole to a sink hole, as a cell polyline.

    ``waypoints`` runs from the source cell to the sink cell inclusive, in
    king-move steps over cells that belong to at most one floor.
    """

    source: Cell
    sink: Cell
    waypoints: tuple[Cell, ...]


@dataclass(frozen=True)
class Drawing:
    """The planar projection of a tiling.

    ``cycles`` are the closed cell polylines (including degenerate two-cell
    cycles from coinciding top/bottom dimers, and cycles closed through
    ghost waypoints); ``jewels`` pairs each vertical dimer's cell with its
    cell color.
    """

    region: TwoStoryRegion
    edges: tuple[DrawnEdge, ...]
    jewels: tuple[tuple[Cell, str], ...]
    ghosts: tuple[GhostRoute, ...]
    cycles: tuple[tuple[Cell, ...], ...]


_KING_STEPS = (
    (-1, -1), (0, -1), (1, -1),
    (-1, 0), (1, 0),
    (-1, 1), (0, 1), (1, 1),
)


def _free_cell(region: TwoStoryRegion, cell: Cell) -> bool:
    """Ghost curves may only visit cells outside the two floors' overlap."""
    return cell not in region.common


def _route_bounds(region: TwoStoryRegion) -> tuple[int, int, int, int]:
    cells = region.top.cells | region.bottom.cells
    xs = [c.x for c in cells]
    ys = [c.y for c in cells]
    return min(xs) - 2, min(ys) - 2, max(xs) + 2, max(ys) + 2


def _ghost_steps(
    region: TwoStoryRegion, cell: Cell, bounds: tuple[int, int, int, int]
) -> Iterable[Cell]:
    x0, y0, x1, y1 = bounds
    for dx, dy in _KING_STEPS:
        nxt = Cell(cell.x + dx, cell.y + dy)
        if not (x0 <= nxt.x <= x1 and y0 <= nxt.y <= y1):
            continue
        if not _free_cell(region, nxt):
            continue
        if dx and dy:
            # A diagonal step squeezes through a lattice corner; require the
            # two cells it cuts between to be free as well so the curve
            # never pinches against the overlap of the floors.
            if not _free_cell(region, Cell(cell.x + dx, cell.y)):
                continue
            if not _free_cell(region, Cell(cell.x, cell.y + dy)):
                continue
        yield nxt


def _shortest_route(region: TwoStoryRegion, source: Cell, sink: Cell) -> GhostRoute:
    bounds = _route_bounds(region)
    prev: dict[Cell, Cell] = {source: source}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        if cur == sink:
            path = [cur]
            while prev[path[-1]] != path[-1]:
                path.append(prev[path[-1]])
            path.reverse()
            return GhostRoute(source, sink, tuple(path))
        for nxt in _ghost_steps(region, cur, bounds):
            if nxt not in prev:
                prev[nxt] = cur
                queue.append(nxt)
    raise NoRoute(f"no ghost route from {tuple(source)} to {tuple(sink)}")


def canonical_ghosts(region: TwoStoryRegion) -> tuple[GhostRoute, ...]:
    """Deterministic ghost connections: sources and sinks are sorted by
    (y, x) and paired in order, each connected by a breadth-first shortest
    route over free cells."""
    sources = sorted((Cell(c.x, c.y) for c in region.sources), key=lambda c: (c.y, c.x))
    sinks = sorted((Cell(c.x, c.y) for c in region.sinks), key=lambda c: (c.y, c.x))
    if len(sources) != len(sinks):
        raise InconsistentGhosts(
            f"{len(sources)} sources cannot pair with {len(sinks)} sinks"
        )
    return tuple(_shortest_route(region, s, t) for s, t in zip(sources, sinks))


def _coerce_ghosts(
    region: TwoStoryRegion,
    ghosts: Sequence[GhostRoute] | Sequence[Sequence[tuple[int, int]]] | None,
) -> tuple[GhostRoute, ...]:
    if ghosts is None:
        if not region.holes:
            return ()
        return canonical_ghosts(region)
    routes: list[GhostRoute] = []
    for g in ghosts:
        if isinstance(g, GhostRoute):
            routes.append(g)
        else:
            cells = tuple(Cell(x, y) for x, y in g)
            if len(cells) < 2:
                raise InconsistentGhosts("a ghost route needs at least two cells")
            routes.append(GhostRoute(cells[0], cells[-1], cells))
    _validate_ghosts(region, routes)
    return tuple(routes)


def _validate_ghosts(region: TwoStoryRegion, routes: Sequence[GhostRoute]) -> None:
    sources = {Cell(c.x, c.y) for c in region.sources}
    sinks = {Cell(c.x, c.y) for c in region.sinks}
    if {r.source for r in routes} != sources or len(routes) != len(sources):
        raise InconsistentGhosts("ghost routes must start at exactly the source holes")
    if {r.sink for r in routes} != sinks or len(sinks) != len(routes):
        raise InconsistentGhosts("ghost routes must end at exactly the sink holes")
    for r in routes:
        if r.waypoints[0] != r.source or r.waypoints[-1] != r.sink:
            raise InconsistentGhosts("route waypoints must run source to sink")
        for cell in r.waypoints:
            if not _free_cell(region, cell):
                raise InconsistentGhosts(
                    f"ghost route visits overlap cell {tuple(cell)}"
                )
        for a, b in zip(r.waypoints, r.waypoints[1:]):
            dx, dy = b.x - a.x, b.y - a.y
            if max(abs(dx), abs(dy)) != 1:
                raise InconsistentGhosts("ghost routes must move in king steps")
            if dx and dy:
                if not _free_cell(region, Cell(a.x + dx, a.y)) or not _free_cell(
                    region, Cell(a.x, a.y + dy)
                ):
                    raise InconsistentGhosts(
                        "diagonal ghost step pinches against the floors' overlap"
                    )


def drawing_of(
    tiling: Tiling,
    ghosts: Sequence[GhostRoute] | Sequence[Sequence[tuple[int, int]]] | None = None,
) -> Drawing:
    """Project a tiling onto the plane: jewels, directed edges, and the
    closed cycles they form (ghost-completed when the floors differ).

    ``ghosts`` overrides the canonical ghost connections; it accepts
    GhostRoute objects or raw waypoint sequences.
    """
    region = tiling.region
    routes = _coerce_ghosts(region, ghosts)

    edges: list[DrawnEdge] = []
    jewels: list[tuple[Cell, str]] = []
    for d in tiling.dimers:
        if d.is_vertical:
            cell = Cell(d.a.x, d.a.y)
            jewels.append((cell, cell_color(cell)))
        else:
            a_cell, b_cell = Cell(d.a.x, d.a.y), Cell(d.b.x, d.b.y)
            if cube_color(d.a) == BLACK:
                edges.append(DrawnEdge(a_cell, b_cell, d.a.z))
            else:
                edges.append(DrawnEdge(b_cell, a_cell, d.a.z))
    jewels.sort(key=lambda jc: (jc[0].y, jc[0].x))
    edges.sort(key=lambda e: (e.src.y, e.src.x, e.floor))

    succ: dict[Cell, Cell] = {}
    for e in edges:
        if e.src in succ:
            raise AssertionError(f"two edges leave {tuple(e.src)}")
        succ[e.src] = e.dst
    route_from: dict[Cell, GhostRoute] = {r.source: r for r in routes}

    nodes = set(succ)
    for e in edges:
        nodes.add(e.dst)
    cycles: list[tuple[Cell, ...]] = []
    seen: set[Cell] = set()
    for start in sorted(nodes, key=lambda c: (c.y, c.x)):
        if start in seen:
            continue
        seen.add(start)
        path: list[Cell] = [start]
        cur = start
        while True:
            if cur in succ:
                hop = [succ[cur]]
            else:
                hop = list(route_from[cur].waypoints[1:])
            path.extend(hop[:-1])
            cur = hop[-1]
            if cur == start:
                break
            path.append(cur)
            seen.add(cur)
        cycles.append(tuple(path))

    return Drawing(region, tuple(edges), tuple(jewels), routes, tuple(cycles))


# -- the invariant ---------------------------------------------------------


def jewel_windings(drawing: Drawing) -> dict[Cell, int]:
    """Total winding number of all cycles around each jewel's cell center."""
    doubled = [
        [(2 * c.x, 2 * c.y) for c in cycle] for cycle in drawing.cycles
    ]
    out: dict[Cell, int] = {}
    for cell, _ in drawing.jewels:
        out[cell] = sum(
            winding_number_doubled(verts, 2 * cell.x, 2 * cell.y) for verts in doubled
        )
    return out


def drawing_invariant(drawing: Drawing) -> LaurentPoly:
    windings = jewel_windings(drawing)
    terms = []
    for cell, color in drawing.jewels:
        terms.append((windings[cell], 1 if color == BLACK else -1))
    return LaurentPoly(terms)


def invariant(
    tiling: Tiling,
    ghosts: Sequence[GhostRoute] | Sequence[Sequence[tuple[int, int]]] | None = None,
) -> LaurentPoly:
    """The Laurent-polynomial invariant of a tiling: black jewels contribute
    +q^k and white jewels -q^k, with k the jewel's total winding number."""
    return drawing_invariant(drawing_of(tiling, ghosts))


def twist(
    tiling: Tiling,
    ghosts: Sequence[GhostRoute] | Sequence[Sequence[tuple[int, int]]] | None = None,
) -> int:
    """The derivative of the invariant at q = 1 (an integer)."""
    return invariant(tiling, ghosts).derivative_at_one()
