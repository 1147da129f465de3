"""Independent brute-force oracles used to freeze derived expected values.

Everything here is deliberately naive and shares no code with the library:
plain set recursion over frozensets of cube pairs.  These oracles were run
first and their outputs frozen into the test files as literals; the tests
also re-run them where cheap to keep the freeze honest.
"""

from __future__ import annotations

from fractions import Fraction


def brute_force_tilings(cubes: frozenset[tuple[int, int, int]]) -> list[frozenset]:
    """All tilings of an arbitrary cube set, as frozensets of sorted cube pairs.

    Recursion: take the minimum cube (plain tuple order), try each of the six
    axis neighbors present and uncovered.
    """
    if not cubes:
        return [frozenset()]
    first = min(cubes)
    x, y, z = first
    results = []
    for nbr in (
        (x + 1, y, z), (x - 1, y, z),
        (x, y + 1, z), (x, y - 1, z),
        (x, y, z + 1), (x, y, z - 1),
    ):
        if nbr in cubes:
            rest = cubes - {first, nbr}
            pair = frozenset({first, nbr})
            for t in brute_force_tilings(rest):
                results.append(t | {pair})
    # dedupe (different recursion paths cannot duplicate because the minimum
    # cube's partner uniquely splits the search, but keep the guard cheap)
    return list({frozenset(t) for t in results})


def brute_force_count(cubes: frozenset[tuple[int, int, int]]) -> int:
    return len(brute_force_tilings(cubes))


def box_cubes(w: int, h: int, d: int = 2) -> frozenset[tuple[int, int, int]]:
    return frozenset((x, y, z) for x in range(w) for y in range(h) for z in range(d))


def polygon_winding(vertices: list[tuple[float, float]], px: float, py: float) -> int:
    """Independent winding number via summed signed angles, exact in spirit:
    uses Fraction-free shoelace-style crossing counting on a jittered ray.

    Counts crossings of the ray (px + t, py + eps) for an eps smaller than
    any coordinate gap, implemented by comparing with Fractions.
    """
    eps = Fraction(1, 7919)
    ry = Fraction(py) + eps
    rx = Fraction(px)
    wind = 0
    n = len(vertices)
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        fay, fby = Fraction(ay), Fraction(by)
        if fay == fby:
            continue
        if min(fay, fby) < ry < max(fay, fby):
            t = (ry - fay) / (fby - fay)
            cross_x = Fraction(ax) + t * (Fraction(bx) - Fraction(ax))
            if cross_x > rx:
                wind += 1 if fby > fay else -1
    # y grows downward in this project; the standard formula above counts
    # +1 for curves that look clockwise on screen, which is the
    # mathematical counterclockwise with y up.  Return as computed: the
    # caller compares conventions, not signs.
    return wind


def _box_other_matching(cubes4: set, d1: frozenset, d2: frozenset):
    """The second perfect matching of a 2x1x1-pair box, or None if the four
    cubes do not form a 2x2x1 box."""
    xs = sorted({c[0] for c in cubes4})
    ys = sorted({c[1] for c in cubes4})
    zs = sorted({c[2] for c in cubes4})
    if sorted((len(xs), len(ys), len(zs))) != [1, 2, 2]:
        return None
    box = {(x, y, z) for x in xs for y in ys for z in zs}
    if box != cubes4:
        return None
    # enumerate all ways to split the box into two adjacent pairs
    cubes = sorted(box)
    result = []
    a = cubes[0]
    for b in cubes[1:]:
        if sum(abs(p - q) for p, q in zip(a, b)) != 1:
            continue
        c, d = [c_ for c_ in cubes[1:] if c_ != b]
        if sum(abs(p - q) for p, q in zip(c, d)) != 1:
            continue
        result.append(frozenset({frozenset({a, b}), frozenset({c, d})}))
    current = frozenset({d1, d2})
    others = [m for m in result if m != current]
    if len(others) != 1:
        return None
    return others[0]


def brute_force_flip_component_sizes(cubes: frozenset) -> list[int]:
    """Sorted sizes of the flip-move components over all tilings of the
    cube set, via naive union-find."""
    tilings = brute_force_tilings(cubes)
    index = {t: i for i, t in enumerate(tilings)}
    parent = list(range(len(tilings)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    from itertools import combinations

    for t, i in index.items():
        for d1, d2 in combinations(sorted(t, key=sorted), 2):
            four = set(d1) | set(d2)
            if len(four) != 4:
                continue
            other = _box_other_matching(four, d1, d2)
            if other is None:
                continue
            t2 = frozenset((t - {d1, d2}) | other)
            j = index[t2]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    from collections import Counter

    sizes = Counter(find(i) for i in range(len(tilings)))
    return sorted(sizes.values())
