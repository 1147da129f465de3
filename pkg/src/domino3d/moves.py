"""Local moves on tilings and the flip-component decomposition.

A *flip* takes two parallel dimers filling a 2x2x1 slab and replaces them
with the perpendicular pair.  A *trit* acts inside a 2x2x2 block that
contains exactly three dimers, one per axis, and rematches those six cubes
the only other way; a trit changes the twist by exactly +1 or -1, and that
sign is computed locally from the block.

``flip_components`` partitions all tilings of a region into connected
components under flips; ``component_trit_graph`` then aggregates every trit
into directed edges between components, oriented so the twist increases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .geometry import BLACK, Cell, Cube, TwoStoryRegion, cell_color, cube_color
from .invariant import invariant as _tiling_invariant
from .invariant import winding_number_doubled
from .polynomial import LaurentPoly
from .tiling import Tiling, enumerate_tilings


class InvalidSite(ValueError):
    """The requested move does not exist in this tiling."""


@dataclass(frozen=True)
class FlipSite:
    """A 2x2x1 slab holding two parallel dimers, named by its minimum cube
    and the plane the slab spans ("xy", "xz" or "yz")."""

    anchor: Cube
    plane: str


@dataclass(frozen=True)
class TritSite:
    """A 2x2x2 block holding one dimer of each axis, named by the minimum
    cell of its footprint.  ``sign`` is the twist change when applied to
    the tiling that produced this site."""

    anchor: Cell
    sign: int


# -- per-region move tables -------------------------------------------------


@lru_cache(maxsize=None)
def _slab_table(region: TwoStoryRegion) -> tuple[tuple[FlipSite, tuple[int, int, int, int]], ...]:
    """Every 2x2x1 slab inside the region, with its four cube indices laid
    out so that matching A pairs (0-1, 2-3) and matching B pairs (0-2, 1-3)."""
    index = region.cube_index()
    out: list[tuple[FlipSite, tuple[int, int, int, int]]] = []

    def add(plane: str, quad: tuple[Cube, Cube, Cube, Cube]) -> None:
        if all(c in index for c in quad):
            out.append((FlipSite(quad[0], plane), tuple(index[c] for c in quad)))

    xs = sorted({c.x for c in region.cubes})
    ys = sorted({c.y for c in region.cubes})
    for y in ys:
        for x in xs:
            for z in (0, 1):
                add("xy", (Cube(x, y, z), Cube(x + 1, y, z),
                           Cube(x, y + 1, z), Cube(x + 1, y + 1, z)))
            add("xz", (Cube(x, y, 0), Cube(x + 1, y, 0),
                       Cube(x, y, 1), Cube(x + 1, y, 1)))
            add("yz", (Cube(x, y, 0), Cube(x, y + 1, 0),
                       Cube(x, y, 1), Cube(x, y + 1, 1)))
    return tuple(out)


@dataclass(frozen=True)
class _Block:
    """A fully-interior 2x2x2 block: the four footprint cells (anchor,
    x-neighbor, y-neighbor, diagonal) and the region indices of all eight
    cubes as ``cube_at[(dx, dy, z)]``."""

    anchor: Cell
    cube_at: tuple[tuple[tuple[int, int, int], int], ...]

    def index_map(self) -> dict[tuple[int, int, int], int]:
        return dict(self.cube_at)


@lru_cache(maxsize=None)
def _block_table(region: TwoStoryRegion) -> tuple[_Block, ...]:
    index = region.cube_index()
    blocks: list[_Block] = []
    for anchor in sorted(region.common, key=lambda c: (c.y, c.x)):
        cells = [Cell(anchor.x + dx, anchor.y + dy) for dx in (0, 1) for dy in (0, 1)]
        if not all(c in region.common for c in cells):
            continue
        cube_at = []
        for dx in (0, 1):
            for dy in (0, 1):
                for z in (0, 1):
                    cube_at.append(((dx, dy, z), index[Cube(anchor.x + dx, anchor.y + dy, z)]))
        blocks.append(_Block(anchor, tuple(cube_at)))
    return tuple(blocks)


# -- flips ------------------------------------------------------------------


def flips(tiling: Tiling) -> list[FlipSite]:
    """All flip sites available in the tiling, in a fixed deterministic
    order (slab scan order over the region)."""
    p = tiling.partners
    out = []
    for site, (i0, i1, i2, i3) in _slab_table(tiling.region):
        if (p[i0] == i1 and p[i2] == i3) or (p[i0] == i2 and p[i1] == i3):
            out.append(site)
    return out


def apply_flip(tiling: Tiling, site: FlipSite) -> Tiling:
    """Replace the slab's parallel dimer pair with the perpendicular pair."""
    for cand, quad in _slab_table(tiling.region):
        if cand == site:
            new = _flip_quad(tiling.partners, quad)
            if new is None:
                raise InvalidSite(f"slab at {site} does not hold a dimer pair")
            return Tiling(tiling.region, new)
    raise InvalidSite(f"no slab at {site} in this region")


def _flip_quad(p: bytes, quad: tuple[int, int, int, int]) -> bytes | None:
    i0, i1, i2, i3 = quad
    b = bytearray(p)
    if p[i0] == i1 and p[i2] == i3:
        b[i0], b[i2] = i2, i0
        b[i1], b[i3] = i3, i1
        return bytes(b)
    if p[i0] == i2 and p[i1] == i3:
        b[i0], b[i1] = i1, i0
        b[i2], b[i3] = i3, i2
        return bytes(b)
    return None


def _flip_neighbors(p: bytes, quads: Iterable[tuple[int, int, int, int]]) -> Iterator[bytes]:
    for quad in quads:
        new = _flip_quad(p, quad)
        if new is not None:
            yield new


# -- trits ------------------------------------------------------------------


def _block_dimers(p: bytes, block: _Block) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """The dimers lying entirely inside the block, as local-offset pairs."""
    imap = block.index_map()
    rev = {i: off for off, i in imap.items()}
    pairs = []
    for off, i in imap.items():
        j = p[i]
        if j in rev and i < j:
            pairs.append((off, rev[j]))
    return pairs


def _trit_of_block(p: bytes, block: _Block) -> tuple[bytes, int] | None:
    """If the block holds one dimer per axis, return the rematched partner
    map and the twist change of that rematch; else None."""
    pairs = _block_dimers(p, block)
    if len(pairs) != 3:
        return None
    axes = set()
    jewel_off = None
    for a, b in pairs:
        if a[0] != b[0]:
            axes.add("x")
        elif a[1] != b[1]:
            axes.add("y")
        else:
            axes.add("z")
            jewel_off = a
    if axes != {"x", "y", "z"} or jewel_off is None:
        return None

    imap = block.index_map()
    ax, ay = block.anchor
    jewel = Cell(ax + jewel_off[0], ay + jewel_off[1])
    diag = Cell(ax + 1 - jewel_off[0], ay + 1 - jewel_off[1])

    # rematch the six covered cubes the only other way: the jewel moves to
    # the diagonal cell, and the x- and y-dimers fold onto the jewel cell
    b = bytearray(p)
    horizontals = [pair for pair in pairs if pair[0][2] == pair[1][2]]
    new_pairs = []
    new_pairs.append(((1 - jewel_off[0], 1 - jewel_off[1], 0), (1 - jewel_off[0], 1 - jewel_off[1], 1)))
    for a, bb in horizontals:
        z = a[2]
        other = a if a[:2] != (1 - jewel_off[0], 1 - jewel_off[1]) else bb
        new_pairs.append(((jewel_off[0], jewel_off[1], z), (other[0], other[1], z)))
    for a, bb in new_pairs:
        ia, ib = imap[a], imap[bb]
        b[ia], b[ib] = ib, ia
    new = bytes(b)

    # the twist change: the jewel's winding moves with the detour, and the
    # change equals the winding of the local difference loop around the
    # block's center corner, signed by the jewel's cell color
    u = v = None
    for a, bb in horizontals:
        z = a[2]
        other = a if Cell(ax + a[0], ay + a[1]) != diag else bb
        other_cell = Cell(ax + other[0], ay + other[1])
        if cube_color(Cube(other_cell.x, other_cell.y, z)) == BLACK:
            u = other_cell  # edge runs other -> diag: into the old path cell
        else:
            v = other_cell
    if u is None or v is None:
        raise AssertionError("block path must have one inbound and one outbound edge")
    loop = [
        (2 * u.x, 2 * u.y),
        (2 * jewel.x, 2 * jewel.y),
        (2 * v.x, 2 * v.y),
        (2 * diag.x, 2 * diag.y),
    ]
    delta_k = winding_number_doubled(loop, 2 * ax + 1, 2 * ay + 1)
    sigma = 1 if cell_color(jewel) == BLACK else -1
    return new, sigma * delta_k


def trits(tiling: Tiling) -> list[TritSite]:
    """All trit sites available in the tiling, in block-scan order, each
    carrying the sign of the twist change it would make."""
    out = []
    p = tiling.partners
    for block in _block_table(tiling.region):
        found = _trit_of_block(p, block)
        if found is not None:
            out.append(TritSite(block.anchor, found[1]))
    return out


def apply_trit(tiling: Tiling, site: TritSite) -> Tiling:
    """Rematch the three one-per-axis dimers of the block at ``site``."""
    for block in _block_table(tiling.region):
        if block.anchor == site.anchor:
            found = _trit_of_block(tiling.partners, block)
            if found is None:
                raise InvalidSite(f"block at {site.anchor} holds no one-per-axis triple")
            return Tiling(tiling.region, found[0])
    raise InvalidSite(f"no 2x2x2 block at {site.anchor} in this region")


# -- flip components --------------------------------------------------------


@dataclass(frozen=True)
class ComponentInfo:
    id: int
    size: int
    representative: Tiling
    invariant: LaurentPoly
    twist: int


@dataclass(frozen=True)
class ComponentTable:
    """The partition of all tilings of a region into flip components.

    Components are numbered by decreasing size, ties broken by the
    lexicographically least representative partner map.
    """

    region: TwoStoryRegion
    components: tuple[ComponentInfo, ...]
    membership: dict[bytes, int]

    @property
    def total_tilings(self) -> int:
        return sum(c.size for c in self.components)

    def component_of(self, tiling: Tiling) -> int:
        return self.membership[tiling.partners]

    def to_json(self, trit_edges: Iterable[tuple[int, int, int]] | None = None) -> dict:
        return {
            "total": self.total_tilings,
            "components": [
                {
                    "id": c.id,
                    "size": c.size,
                    "invariant": c.invariant.to_json(),
                    "twist": c.twist,
                    "representative": c.representative.to_json(),
                }
                for c in self.components
            ],
            "trit_edges": [list(e) for e in (trit_edges if trit_edges is not None else ())],
        }


def flip_components(region: TwoStoryRegion) -> ComponentTable:
    """Group every tiling of the region by flip reachability."""
    quads = [quad for _, quad in _slab_table(region)]
    comp_of: dict[bytes, int] = {}
    reps: list[bytes] = []
    sizes: list[int] = []
    for t in enumerate_tilings(region):
        key = t.partners
        if key in comp_of:
            continue
        cid = len(reps)
        comp_of[key] = cid
        frontier = [key]
        best = key
        size = 0
        while frontier:
            cur = frontier.pop()
            size += 1
            if cur < best:
                best = cur
            for nxt in _flip_neighbors(cur, quads):
                if nxt not in comp_of:
                    comp_of[nxt] = cid
                    frontier.append(nxt)
        reps.append(best)
        sizes.append(size)

    order = sorted(range(len(reps)), key=lambda c: (-sizes[c], reps[c]))
    remap = {old: new for new, old in enumerate(order)}
    infos = []
    for old in order:
        rep = Tiling(region, reps[old])
        poly = _tiling_invariant(rep)
        infos.append(
            ComponentInfo(
                id=remap[old],
                size=sizes[old],
                representative=rep,
                invariant=poly,
                twist=poly.derivative_at_one(),
            )
        )
    membership = {key: remap[old] for key, old in comp_of.items()}
    return ComponentTable(region, tuple(infos), membership)


@dataclass(frozen=True)
class TritGraph:
    """Trit moves aggregated between flip components.

    Each edge ``(a, b, 1)`` records that some trit carries a tiling of
    component ``a`` to component ``b`` while raising the twist by one; the
    reverse move always exists with sign -1 and is not stored separately.
    """

    edges: tuple[tuple[int, int, int], ...]
    connected: bool


def component_trit_graph(table: ComponentTable) -> TritGraph:
    """Scan every tiling once and record all trit moves between components,
    oriented in the twist-increasing direction and deduplicated."""
    blocks = _block_table(table.region)
    edges: set[tuple[int, int, int]] = set()
    for key, cid in table.membership.items():
        for block in blocks:
            found = _trit_of_block(key, block)
            if found is None:
                continue
            new, sign = found
            other = table.membership[new]
            if sign > 0:
                edges.add((cid, other, 1))
            else:
                edges.add((other, cid, 1))

    n = len(table.components)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b, _ in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    connected = n <= 1 or len({find(i) for i in range(n)}) == 1
    return TritGraph(tuple(sorted(edges)), connected)
