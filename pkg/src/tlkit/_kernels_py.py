"""Pure-Python twin of the compiled kernels.

Same contract as the Cython module ``tlkit._kernels``; one of the two is
picked at import time by ``tlkit._backend``.  Everything here works on
plain partner tuples (1-based, ``pairing[i-1]`` is the partner of node i)
so the two implementations stay trivially interchangeable.

The enumerator performs a depth-first search extending the
smallest-index unmatched node, generating exactly the legal partners at
each step:

* bottom frontier f: unmatched bottom nodes at odd offsets until the
  first matched bottom node walls the region off; if no wall, also every
  second top node above the highest already-used top landing point;
* top frontier f: top nodes at odd offsets until the first matched one.

Each placement leaves an even number of free nodes on both sides of the
new strand, so every branch completes and the leaves are exactly the
noncrossing perfect matchings, emitted in ascending lexicographic order
of the partner array.
"""

from __future__ import annotations


def enumerate_pairings(dimension: int) -> list[tuple[int, ...]]:
    """All noncrossing perfect matchings on 2N nodes as partner tuples,
    in ascending lexicographic order."""
    out: list[tuple[int, ...]] = []
    _search(dimension, lambda partner: out.append(tuple(partner[1:])))
    return out


def count_pairings(dimension: int) -> int:
    """Number of leaves of the same search, without materializing them."""
    total = 0

    def bump(_partner: list[int]) -> None:
        nonlocal total
        total += 1

    _search(dimension, bump)
    return total


def _search(dimension, emit):
    if dimension < 1:
        raise ValueError("dimension must be at least 1")
    n = dimension
    size = 2 * n
    partner = [0] * (size + 1)

    def rec(frontier: int, y_max: int) -> None:
        f = frontier
        while f <= size and partner[f]:
            f += 1
        if f > size:
            emit(partner)
            return
        candidates: list[int] = []
        if f <= n:
            j = f + 1
            while j <= n and not partner[j]:
                if (j - f) % 2 == 1:
                    candidates.append(j)
                j += 1
            walled = j <= n
            if not walled:
                j = max(y_max + 1, n + 1)
                if (f + j + n) % 2 == 1:
                    j += 1
                while j <= size:
                    candidates.append(j)
                    j += 2
        else:
            j = f + 1
            while j <= size and not partner[j]:
                candidates.append(j)
                if j + 1 > size or partner[j + 1]:
                    break
                j += 2
        for j in candidates:
            partner[f] = j
            partner[j] = f
            rec(f + 1, j if j > n else y_max)
            partner[f] = 0
            partner[j] = 0

    rec(1, 0)


def compose_pairings(
    bottom: tuple[int, ...], top: tuple[int, ...], dimension: int
) -> tuple[tuple[int, ...], int]:
    """Stack ``top`` onto ``bottom`` and resolve the product.

    Union-find over the 3N stacking nodes (bottom boundary, glued middle
    interface, top boundary).  Returns the boundary partner tuple of the
    loop-free product and the number of closed loops, i.e. the exponent
    of the loop parameter picked up by the composition.
    """
    n = dimension
    parent = list(range(3 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # Diagram nodes map into stack slots 0..3n-1: the bottom factor keeps
    # its labels (bottom rows 0..n-1, its top row lands on the middle
    # n..2n-1), the top factor is shifted up by n.
    for a in range(1, 2 * n + 1):
        b = bottom[a - 1]
        if a < b:
            ra, rb = find(a - 1), find(b - 1)
            if ra != rb:
                parent[rb] = ra
    for a in range(1, 2 * n + 1):
        b = top[a - 1]
        if a < b:
            ra, rb = find(a + n - 1), find(b + n - 1)
            if ra != rb:
                parent[rb] = ra

    first_boundary = [-1] * (3 * n)
    pairing = [0] * (2 * n)
    for x in range(3 * n):
        if x < n or x >= 2 * n:
            r = find(x)
            node = x + 1 if x < n else x - n + 1
            if first_boundary[r] == -1:
                first_boundary[r] = node
            else:
                other = first_boundary[r]
                pairing[other - 1] = node
                pairing[node - 1] = other
    loops = sum(
        1 for x in range(3 * n) if find(x) == x and first_boundary[x] == -1
    )
    return tuple(pairing), loops
