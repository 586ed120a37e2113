"""Independent brute-force oracles the library is checked against.

Everything here is deliberately naive: full enumeration of involutions,
filtering by the direct noncrossing predicate, and a geometric
straight-segment intersection test on a circle embedding of the box
boundary.  None of it shares code with the search or composition paths
under test.
"""

from __future__ import annotations

import math
from typing import Iterator, Mapping

from tlkit.diagrams import is_noncrossing, node_position


def all_involutions(dimension: int) -> Iterator[tuple[int, ...]]:
    """Every fixed-point-free involution on 2N nodes as a partner tuple."""
    n = dimension
    pairing = [0] * (2 * n)

    def rec(remaining: list[int]) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield tuple(pairing)
            return
        a = remaining[0]
        for k in range(1, len(remaining)):
            b = remaining[k]
            pairing[a - 1] = b
            pairing[b - 1] = a
            yield from rec(remaining[1:k] + remaining[k + 1 :])
            pairing[a - 1] = 0
            pairing[b - 1] = 0

    yield from rec(list(range(1, 2 * n + 1)))


def brute_force_basis(dimension: int) -> list[tuple[int, ...]]:
    """All involutions passing is_noncrossing, sorted."""
    return sorted(
        p for p in all_involutions(dimension) if is_noncrossing(p, dimension)
    )


def completions(partial: Mapping[int, int], dimension: int) -> list[tuple[int, ...]]:
    """All noncrossing perfect matchings containing the given edges."""
    return [
        p
        for p in brute_force_basis(dimension)
        if all(p[a - 1] == b for a, b in partial.items())
    ]


def _orient(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def geometric_noncrossing(pairing: tuple[int, ...], dimension: int) -> bool:
    """Straight chords on a circle carrying the box boundary order.

    Walking the box boundary (bottom left to right, then up the side and
    back along the top) visits the nodes in one cyclic order; placing
    them on a circle in that order is a homeomorphic embedding, and two
    strands can be drawn disjoint exactly when the straight chords do not
    intersect.  Distinct chords of a circle are never collinear, so the
    orientation-sign test is robust here.
    """
    n = dimension
    points = {}
    for i in range(1, 2 * n + 1):
        angle = 2 * math.pi * (node_position(i, n) - 1) / (2 * n)
        points[i] = (math.cos(angle), math.sin(angle))
    chords = [
        (points[i], points[pairing[i - 1]])
        for i in range(1, 2 * n + 1)
        if i < pairing[i - 1]
    ]
    for idx, (p1, p2) in enumerate(chords):
        for p3, p4 in chords[idx + 1 :]:
            o1 = _orient(p1, p2, p3)
            o2 = _orient(p1, p2, p4)
            o3 = _orient(p3, p4, p1)
            o4 = _orient(p3, p4, p2)
            if o1 * o2 < 0 and o3 * o4 < 0:
                return False
    return True
